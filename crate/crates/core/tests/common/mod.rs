//! Brute-force reference implementations on plain digit vectors.
//!
//! Nothing here calls into the library's arithmetic: spans come from
//! enumerating coefficient tuples, weights from lookup tables and PAut from a
//! scan over all of S_alpha x S_beta comparing full image sets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use z2z4::{MixedWord, Perm, PermPair};

pub type Raw = (Vec<u8>, Vec<u8>);

pub const LEE: [usize; 4] = [0, 1, 2, 1];
pub const GRAY: [[u8; 2]; 4] = [[0, 0], [0, 1], [1, 1], [1, 0]];

pub fn raw(w: &MixedWord) -> Raw {
    (
        w.binary().iter().map(|b| b.value()).collect(),
        w.quaternary().iter().map(|q| q.value()).collect(),
    )
}

pub fn mixed(r: &Raw) -> MixedWord {
    MixedWord::from_digits(&r.0, &r.1).unwrap()
}

pub fn add(a: &Raw, b: &Raw) -> Raw {
    (
        a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % 2).collect(),
        a.1.iter().zip(&b.1).map(|(x, y)| (x + y) % 4).collect(),
    )
}

pub fn scale(k: u8, a: &Raw) -> Raw {
    (
        a.0.iter().map(|x| (k * x) % 2).collect(),
        a.1.iter().map(|x| (k * x) % 4).collect(),
    )
}

pub fn lee_weight(a: &Raw) -> usize {
    a.0.iter().map(|&x| x as usize).sum::<usize>()
        + a.1.iter().map(|&x| LEE[x as usize]).sum::<usize>()
}

pub fn gray(a: &Raw) -> Vec<u8> {
    let mut out = a.0.clone();
    for &x in &a.1 {
        out.extend_from_slice(&GRAY[x as usize]);
    }
    out
}

pub fn hamming(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn inner(a: &Raw, b: &Raw) -> u8 {
    let bin: u32 = a.0.iter().zip(&b.0).map(|(&x, &y)| (x * y) as u32).sum();
    let quat: u32 = a.1.iter().zip(&b.1).map(|(&x, &y)| (x * y) as u32).sum();
    ((2 * bin + quat) % 4) as u8
}

pub fn ambient(alpha: usize, beta: usize) -> Vec<Raw> {
    let mut out = Vec::new();
    let total = (1usize << alpha) * (1usize << (2 * beta));
    for mut n in 0..total {
        let mut q = vec![0u8; beta];
        for j in (0..beta).rev() {
            q[j] = (n % 4) as u8;
            n /= 4;
        }
        let mut b = vec![0u8; alpha];
        for i in (0..alpha).rev() {
            b[i] = (n % 2) as u8;
            n /= 2;
        }
        out.push((b, q));
    }
    out
}

/// All Z4-combinations sum c_i g_i with c_i in 0..4.
pub fn span(alpha: usize, beta: usize, gens: &[Raw]) -> BTreeSet<Raw> {
    let mut out = BTreeSet::new();
    let combos = 4usize.pow(gens.len() as u32);
    for mut n in 0..combos {
        let mut acc: Raw = (vec![0; alpha], vec![0; beta]);
        for g in gens {
            acc = add(&acc, &scale((n % 4) as u8, g));
            n /= 4;
        }
        out.insert(acc);
    }
    out
}

pub fn dual(alpha: usize, beta: usize, words: &BTreeSet<Raw>) -> BTreeSet<Raw> {
    ambient(alpha, beta)
        .into_iter()
        .filter(|x| words.iter().all(|c| inner(x, c) == 0))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn permute(sigma: &[usize], tau: &[usize], a: &Raw) -> Raw {
    (
        sigma.iter().map(|&i| a.0[i]).collect(),
        tau.iter().map(|&i| a.1[i]).collect(),
    )
}

/// Every pair whose image of the whole code equals the code.
pub fn paut(alpha: usize, beta: usize, words: &BTreeSet<Raw>) -> BTreeSet<PermPair> {
    let mut out = BTreeSet::new();
    let sigmas = permutations(alpha);
    let taus = permutations(beta);
    for s in &sigmas {
        for t in &taus {
            let image: BTreeSet<Raw> = words.iter().map(|w| permute(s, t, w)).collect();
            if &image == words {
                out.insert(PermPair::new(
                    Perm::new(s.clone()).unwrap(),
                    Perm::new(t.clone()).unwrap(),
                ));
            }
        }
    }
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
