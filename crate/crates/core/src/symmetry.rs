//! Coordinate permutations, permutation equivalence and PAut(C).
//!
//! Convention: applying a permutation `p` to a sequence `x` yields
//! `y[i] = x[p[i]]`. Every operation in this module uses it.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{weight_profile, GeneratorStats};
use crate::code::{AdditiveCode, Codewords};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::{MixedWord, Z2, Z4};

/// A permutation of `{0, .., n-1}` in one-line form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// From 1-based one-line notation, e.g. `[2, 1, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let zero_based = images
            .iter()
            .map(|&i| i.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidPermutation("index 0 in 1-based notation".into()))?;
        Perm::new(zero_based)
    }

    /// From disjoint cycles in 1-based notation, e.g. `&[&[1, 2, 4]]`.
    /// A cycle `(a b c)` here means position `a` takes its entry from `b`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &from) in cycle.iter().enumerate() {
                let to = cycle[(k + 1) % cycle.len()];
                if from == 0 || to == 0 || from > n || to > n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle {cycle:?} out of range"
                    )));
                }
                images[from - 1] = to - 1;
            }
        }
        Perm::new(images)
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Right rotation `y[i] = x[i-1]`.
    pub fn rotation(n: usize) -> Self {
        Perm((0..n).map(|i| (i + n - 1) % n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        self.0.iter().map(|&i| xs[i].clone()).collect()
    }

    /// The permutation that applies `self` first, then `next`.
    pub fn then(&self, next: &Perm) -> Perm {
        Perm(next.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Perm(inv)
    }

    /// All permutations of `{0, .., n-1}` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        (0..n).permutations(n).map(Perm)
    }
}

impl fmt::Display for Perm {
    /// 1-based one-line notation, e.g. `[2 1 3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().map(|i| i + 1).join(" "))
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An element `(sigma, tau)` of S_alpha x S_beta.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PermPair {
    pub sigma: Perm,
    pub tau: Perm,
}

impl PermPair {
    pub fn new(sigma: Perm, tau: Perm) -> Self {
        PermPair { sigma, tau }
    }

    pub fn identity(alpha: usize, beta: usize) -> Self {
        PermPair::new(Perm::identity(alpha), Perm::identity(beta))
    }

    /// The pair realising the simultaneous cyclic shift.
    pub fn cyclic_shift(alpha: usize, beta: usize) -> Self {
        PermPair::new(Perm::rotation(alpha), Perm::rotation(beta))
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.sigma.len(), self.tau.len())
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.tau.is_identity()
    }

    pub fn apply(&self, w: &MixedWord) -> Result<MixedWord> {
        w.ensure_shape(self.shape())?;
        Ok(self.apply_same_shape(w))
    }

    fn apply_same_shape(&self, w: &MixedWord) -> MixedWord {
        MixedWord::from_parts_unchecked(
            self.sigma.apply(w.binary()),
            self.tau.apply(w.quaternary()),
        )
    }

    pub fn then(&self, next: &PermPair) -> PermPair {
        PermPair::new(self.sigma.then(&next.sigma), self.tau.then(&next.tau))
    }

    pub fn inverse(&self) -> PermPair {
        PermPair::new(self.sigma.inverse(), self.tau.inverse())
    }
}

impl fmt::Display for PermPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sigma, self.tau)
    }
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

fn search_bound(alpha: usize, beta: usize) -> u128 {
    match (factorial(alpha), factorial(beta)) {
        (Some(a), Some(b)) => a.saturating_mul(b),
        _ => u128::MAX,
    }
}

fn check_search_cap(alpha: usize, beta: usize, limits: &Limits) -> Result<()> {
    let bound = search_bound(alpha, beta);
    if bound > limits.search {
        return Err(Error::SearchCap {
            bound,
            limit: limits.search,
        });
    }
    Ok(())
}

/// The code `{ p(c) : c in C }`.
pub fn image_code(p: &PermPair, code: &AdditiveCode) -> Result<AdditiveCode> {
    if p.shape() != code.shape() {
        return Err(Error::ShapeMismatch {
            expected: code.shape(),
            found: p.shape(),
        });
    }
    // a coordinate permutation is additive, so images of generators span the image
    AdditiveCode::new(
        code.alpha(),
        code.beta(),
        code.generators()
            .iter()
            .map(|g| p.apply_same_shape(g))
            .collect(),
    )
}

fn binary_projection(words: &Codewords) -> HashSet<Vec<Z2>> {
    words.iter().map(|w| w.binary().to_vec()).collect()
}

fn quaternary_projection(words: &Codewords) -> HashSet<Vec<Z4>> {
    words.iter().map(|w| w.quaternary().to_vec()).collect()
}

/// Permutations carrying the projection `from` onto `onto`, in lexicographic order.
fn feasible<T: Clone + Eq + std::hash::Hash>(
    n: usize,
    from: &HashSet<Vec<T>>,
    onto: &HashSet<Vec<T>>,
) -> Vec<Perm> {
    Perm::all(n)
        .filter(|p| from.iter().all(|x| onto.contains(&p.apply(x))))
        .collect()
}

/// Lexicographically first `(sigma, tau)` with `image_code(C1) = C2`.
///
/// Codes with different sizes or weight profiles are rejected before the
/// search. Only pairs whose parts map each projection of `C1` onto that of
/// `C2` are tried.
pub fn find_equivalence(
    first: &AdditiveCode,
    second: &AdditiveCode,
    limits: &Limits,
) -> Result<Option<PermPair>> {
    if first.shape() != second.shape() {
        return Err(Error::ShapeMismatch {
            expected: first.shape(),
            found: second.shape(),
        });
    }
    check_search_cap(first.alpha(), first.beta(), limits)?;
    let a = first.enumerate(limits.enumerate)?;
    let b = second.enumerate(limits.enumerate)?;
    if a.len() != b.len()
        || weight_profile(first, limits.enumerate)? != weight_profile(second, limits.enumerate)?
    {
        return Ok(None);
    }
    let sigmas = feasible(
        first.alpha(),
        &binary_projection(&a),
        &binary_projection(&b),
    );
    let taus = feasible(
        first.beta(),
        &quaternary_projection(&a),
        &quaternary_projection(&b),
    );
    for sigma in &sigmas {
        for tau in &taus {
            let p = PermPair::new(sigma.clone(), tau.clone());
            if first
                .generators()
                .iter()
                .all(|g| b.contains(&p.apply_same_shape(g)))
            {
                return Ok(Some(p));
            }
        }
    }
    Ok(None)
}

/// A verified subgroup of S_alpha x S_beta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAutGroup {
    alpha: usize,
    beta: usize,
    elements: BTreeSet<PermPair>,
}

impl PAutGroup {
    pub fn order(&self) -> u128 {
        self.elements.len() as u128
    }

    pub fn elements(&self) -> &BTreeSet<PermPair> {
        &self.elements
    }

    pub fn contains(&self, p: &PermPair) -> bool {
        self.elements.contains(p)
    }

    /// Equal to all of S_alpha x S_beta.
    pub fn is_full(&self) -> bool {
        self.order() == search_bound(self.alpha, self.beta)
    }
}

/// Checks identity membership, closure under composition and under inverses.
///
/// Composition is checked by growing the subgroup generated by a greedy
/// subset of `elements` and failing as soon as it leaves `elements`; the
/// generated group equals `elements` exactly when `elements` is a group.
pub fn verify_group(alpha: usize, beta: usize, elements: &BTreeSet<PermPair>) -> Result<()> {
    let identity = PermPair::identity(alpha, beta);
    if !elements.contains(&identity) {
        return Err(Error::GroupAxiom("identity missing".into()));
    }
    for p in elements {
        if !elements.contains(&p.inverse()) {
            return Err(Error::GroupAxiom(format!("inverse of {p} missing")));
        }
    }
    let mut generators: Vec<PermPair> = Vec::new();
    let mut generated: BTreeSet<PermPair> = BTreeSet::from([identity]);
    for p in elements {
        if generated.contains(p) {
            continue;
        }
        generators.push(p.clone());
        let mut queue: Vec<PermPair> = generated.iter().cloned().collect();
        while let Some(x) = queue.pop() {
            for g in &generators {
                let y = x.then(g);
                if !elements.contains(&y) {
                    return Err(Error::GroupAxiom(format!(
                        "{x} then {g} gives {y}, which is missing"
                    )));
                }
                if generated.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive PAut(C).
///
/// Candidate `sigma` (resp. `tau`) must map the binary (resp. quaternary)
/// projection of C onto itself; surviving pairs are kept when they map every
/// generator into C. The scan is parallel over `sigma` and the result is
/// verified to be a group before it is returned.
pub fn paut(code: &AdditiveCode, limits: &Limits) -> Result<PAutGroup> {
    check_search_cap(code.alpha(), code.beta(), limits)?;
    let words = code.enumerate(limits.enumerate)?;
    let bin = binary_projection(&words);
    let quat = quaternary_projection(&words);
    let sigmas = feasible(code.alpha(), &bin, &bin);
    let taus = feasible(code.beta(), &quat, &quat);

    let elements: BTreeSet<PermPair> = sigmas
        .par_iter()
        .flat_map_iter(|sigma| {
            let words = &words;
            taus.iter().filter_map(move |tau| {
                let p = PermPair::new(sigma.clone(), tau.clone());
                code.generators()
                    .iter()
                    .all(|g| words.contains(&p.apply_same_shape(g)))
                    .then_some(p)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();

    verify_group(code.alpha(), code.beta(), &elements)?;
    Ok(PAutGroup {
        alpha: code.alpha(),
        beta: code.beta(),
        elements,
    })
}

/// Closed-form order for a one-generator code, evaluated verbatim:
/// `(l! + (alpha-l)! - 1) * (k! + s! + q! + r! - 3)` with `l = units_binary`,
/// `k = zero_divisors`, `s = zeros_quaternary`, `q = ones`, `r = threes`.
pub fn paut_order_formula(stats: &GeneratorStats, alpha: usize) -> Result<u128> {
    let fact = |n| factorial(n).ok_or(Error::Overflow("factorial"));
    let binary = fact(stats.units_binary)?
        .checked_add(fact(alpha.saturating_sub(stats.units_binary))?)
        .ok_or(Error::Overflow("binary factor"))?
        - 1;
    let quaternary = [
        stats.zero_divisors,
        stats.zeros_quaternary,
        stats.ones,
        stats.threes,
    ]
    .into_iter()
    .try_fold(0u128, |acc, n| {
        acc.checked_add(fact(n)?)
            .ok_or(Error::Overflow("quaternary factor"))
    })? - 3;
    binary
        .checked_mul(quaternary)
        .ok_or(Error::Overflow("order formula"))
}

/// Both sides of "cyclic iff PAut is everything".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CyclicAudit {
    pub cyclic: bool,
    pub paut_full: bool,
    pub theorem_holds: bool,
}

pub fn audit_cyclic_paut(code: &AdditiveCode, limits: &Limits) -> Result<CyclicAudit> {
    let cyclic = code.is_cyclic(limits.enumerate)?;
    let paut_full = paut(code, limits)?.is_full();
    Ok(CyclicAudit {
        cyclic,
        paut_full,
        theorem_holds: cyclic == paut_full,
    })
}

/// Machine-readable PAut report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PAutReport {
    pub order: u128,
    pub elements: Vec<(Perm, Perm)>,
    pub formula_order: Option<u128>,
    pub formula_matches: Option<bool>,
}

/// Exhaustive group plus, for one-generator codes, the closed-form order.
pub fn paut_report(code: &AdditiveCode, limits: &Limits) -> Result<PAutReport> {
    let group = paut(code, limits)?;
    let formula_order = match code.generators() {
        [g] => Some(paut_order_formula(&GeneratorStats::of(g), code.alpha())?),
        _ => None,
    };
    Ok(PAutReport {
        order: group.order(),
        elements: group
            .elements()
            .iter()
            .map(|p| (p.sigma.clone(), p.tau.clone()))
            .collect(),
        formula_order,
        formula_matches: formula_order.map(|f| f == group.order()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::word;

    fn code(alpha: usize, beta: usize, gens: &[&str]) -> AdditiveCode {
        AdditiveCode::new(alpha, beta, gens.iter().map(|g| word(g)).collect()).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn perm_basics() {
        let p = Perm::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(p.apply(&['a', 'b', 'c']), vec!['b', 'c', 'a']);
        assert_eq!(p.then(&p.inverse()), Perm::identity(3));
        assert_eq!(p.to_string(), "[2 3 1]");
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::from_one_based(&[0, 1]).is_err());
        assert_eq!(
            Perm::from_cycles(4, &[&[1, 3]]).unwrap(),
            Perm::new(vec![2, 1, 0, 3]).unwrap()
        );
        assert_eq!(Perm::all(3).count(), 6);
        assert_eq!(Perm::all(0).count(), 1);
    }

    #[test]
    fn then_matches_sequential_application() {
        let p = Perm::from_one_based(&[2, 3, 1, 4]).unwrap();
        let q = Perm::from_one_based(&[4, 1, 3, 2]).unwrap();
        let xs = [10, 20, 30, 40];
        assert_eq!(p.then(&q).apply(&xs), q.apply(&p.apply(&xs)));
    }

    #[test]
    fn apply_pair_examples() {
        let w = word("101|121");
        assert_eq!(PermPair::identity(3, 3).apply(&w).unwrap(), w);
        let swap = PermPair::new(Perm::from_cycles(2, &[&[1, 2]]).unwrap(), Perm::identity(2));
        assert_eq!(swap.apply(&word("10|31")).unwrap(), word("01|31"));
        let rev = PermPair::new(Perm::identity(3), Perm::new(vec![2, 1, 0]).unwrap());
        assert_eq!(rev.apply(&word("101|123")).unwrap(), word("101|321"));
        assert!(rev.apply(&word("10|123")).is_err());
        assert_eq!(
            PermPair::cyclic_shift(3, 3)
                .apply(&word("110|112"))
                .unwrap(),
            word("110|112").cyclic_shift()
        );
    }

    #[test]
    fn image_code_examples() {
        let c = code(2, 2, &["10|31"]);
        let id = image_code(&PermPair::identity(2, 2), &c).unwrap();
        assert!(id.same_codewords(&c, 1 << 20).unwrap());
        let swap = PermPair::new(Perm::from_cycles(2, &[&[1, 2]]).unwrap(), Perm::identity(2));
        let img = image_code(&swap, &c).unwrap();
        assert!(img
            .same_codewords(&code(2, 2, &["01|31"]), 1 << 20)
            .unwrap());
        assert!(image_code(&PermPair::identity(3, 2), &c).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let c = code(2, 2, &["10|31"]);
        assert_eq!(
            find_equivalence(&c, &c, &limits()).unwrap(),
            Some(PermPair::identity(2, 2))
        );
        let p = find_equivalence(&c, &code(2, 2, &["01|31"]), &limits())
            .unwrap()
            .unwrap();
        assert_eq!(p.sigma, Perm::from_cycles(2, &[&[1, 2]]).unwrap());
        assert!(p.tau.is_identity());

        let c1 = code(3, 3, &["101|121"]);
        let c2 = code(3, 3, &["110|112"]);
        let p = find_equivalence(&c1, &c2, &limits()).unwrap().unwrap();
        assert!(image_code(&p, &c1)
            .unwrap()
            .same_codewords(&c2, 1 << 20)
            .unwrap());

        // profiles {0,1,2} vs {0,1}: rejected before the search
        assert_eq!(
            find_equivalence(&code(1, 1, &["0|1"]), &code(1, 1, &["1|0"]), &limits()).unwrap(),
            None
        );
        assert!(find_equivalence(&code(1, 1, &["0|1"]), &code(1, 2, &[]), &limits()).is_err());
    }

    #[test]
    fn paut_examples() {
        let g = paut(&code(4, 4, &["1111|3333"]), &limits()).unwrap();
        assert_eq!(g.order(), 576);
        assert!(g.is_full());

        let ambient = code(2, 2, &["10|00", "01|00", "00|10", "00|01"]);
        assert!(paut(&ambient, &limits()).unwrap().is_full());

        assert_eq!(
            paut(&code(4, 4, &["1101|1231"]), &limits())
                .unwrap()
                .order(),
            12
        );
    }

    #[test]
    fn paut_search_cap() {
        let c = code(7, 7, &[]);
        assert!(matches!(paut(&c, &limits()), Err(Error::SearchCap { .. })));
    }

    #[test]
    fn formula_examples() {
        let f = |w: &str, alpha| paut_order_formula(&GeneratorStats::of(&word(w)), alpha).unwrap();
        assert_eq!(f("1101|1231", 4), 12);
        assert_eq!(f("1010|1213", 4), 6);
        // all-one u, all-zero v: (alpha! + 0! - 1)(beta! + 0! + 0! + 0! - 3)
        assert_eq!(f("111|000", 3), 6 * 6);
    }

    #[test]
    fn verify_group_rejects_non_groups() {
        let id = PermPair::identity(2, 0);
        let swap = PermPair::new(Perm::from_cycles(2, &[&[1, 2]]).unwrap(), Perm::identity(0));
        assert!(verify_group(2, 0, &BTreeSet::from([id.clone(), swap.clone()])).is_ok());
        assert!(verify_group(2, 0, &BTreeSet::from([swap])).is_err());

        let c3 = PermPair::new(Perm::from_one_based(&[2, 3, 1]).unwrap(), Perm::identity(0));
        let err = verify_group(
            3,
            0,
            &BTreeSet::from([PermPair::identity(3, 0), c3.clone(), c3.inverse()]),
        );
        assert!(err.is_ok());
        let t = PermPair::new(Perm::from_cycles(3, &[&[1, 2]]).unwrap(), Perm::identity(0));
        let u = PermPair::new(Perm::from_cycles(3, &[&[2, 3]]).unwrap(), Perm::identity(0));
        let bad = BTreeSet::from([PermPair::identity(3, 0), t, u]);
        assert!(matches!(
            verify_group(3, 0, &bad),
            Err(Error::GroupAxiom(_))
        ));
    }

    #[test]
    fn cyclic_audit_examples() {
        let a = audit_cyclic_paut(&code(4, 4, &["1111|3333"]), &limits()).unwrap();
        assert_eq!(
            a,
            CyclicAudit {
                cyclic: true,
                paut_full: true,
                theorem_holds: true
            }
        );
        let a = audit_cyclic_paut(&code(2, 2, &["10|11"]), &limits()).unwrap();
        assert!(!a.cyclic);
        let ambient = code(1, 2, &["1|00", "0|10", "0|01"]);
        let a = audit_cyclic_paut(&ambient, &limits()).unwrap();
        assert!(a.cyclic && a.paut_full && a.theorem_holds);
    }

    #[test]
    fn cyclic_code_with_small_paut() {
        // {0000,1010,0101,1111} is rotation-stable but (1 2) breaks it
        let c = code(4, 0, &["1010|", "0101|"]);
        let a = audit_cyclic_paut(&c, &limits()).unwrap();
        assert!(a.cyclic && !a.paut_full && !a.theorem_holds);
    }
}
