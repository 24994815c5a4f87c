//! One function per subcommand. Each returns a serializable report whose
//! human-readable form is rendered from the same value, so `--json` and the
//! plain output never disagree.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;
use z2z4::{
    classify, find_equivalence, find_relative_structure, image_code, paut_report, AdditiveCode,
    BinaryWord, ClassificationReport, Limits, MixedWord, PAutReport, PermPair, TwoDistance,
};

use crate::audit::{check_theorems, AuditReport};
use crate::codefile::{export_codewords, parse_code_file, CodeFileError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    File(#[from] CodeFileError),
    #[error(transparent)]
    Code(#[from] z2z4::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 other, 2 parse, 3 cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::File(CodeFileError::Io { .. }) => 1,
            CliError::File(_) => 2,
            CliError::Code(z2z4::Error::SizeCap { .. } | z2z4::Error::SearchCap { .. }) => 3,
            _ => 1,
        }
    }
}

pub const EXIT_NOT_FOUND: i32 = 4;

/// A report that can be printed either way.
pub trait Report: Serialize {
    fn human(&self) -> String;

    /// Nonzero when the command ran but found nothing.
    fn exit_code(&self) -> i32 {
        0
    }
}

pub fn render<R: Report>(report: &R, json: bool) -> Result<String, CliError> {
    if json {
        Ok(serde_json::to_string_pretty(report)? + "\n")
    } else {
        Ok(report.human())
    }
}

fn words_line<T: std::fmt::Display>(items: &[T]) -> String {
    if items.is_empty() {
        "(none)".into()
    } else {
        items
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Report for ClassificationReport {
    fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "shape: alpha={} beta={}", self.alpha, self.beta);
        let _ = writeln!(out, "size: {}", self.size);
        let profile: Vec<String> = self
            .weight_profile
            .0
            .iter()
            .map(|(w, n)| format!("{w}:{n}"))
            .collect();
        let _ = writeln!(out, "weight profile: {}", profile.join(" "));
        let _ = match self.one_weight {
            Some(w) => writeln!(out, "one-weight: yes ({w})"),
            None => writeln!(out, "one-weight: no"),
        };
        let _ = match self.two_distance {
            Some(TwoDistance::Pair(lo, hi)) => writeln!(out, "two-distance: yes ({lo}, {hi})"),
            Some(TwoDistance::Single(d)) => writeln!(out, "two-distance: degenerate ({d})"),
            None => writeln!(out, "two-distance: no"),
        };
        let _ = match &self.relative {
            Some(r) => writeln!(
                out,
                "relative two-weight: C({}, {}) with C1 = <{}>",
                r.m1,
                r.m,
                words_line(&r.subcode_generators)
            ),
            None => writeln!(out, "relative two-weight: no"),
        };
        let _ = writeln!(
            out,
            "even weights: {}; (1..1|2..2) in dual: {}",
            self.even_weight.all_even, self.even_weight.dual_member
        );
        out
    }
}

pub fn cmd_classify(path: &Path, limits: &Limits) -> Result<ClassificationReport, CliError> {
    let code = parse_code_file(path)?;
    Ok(classify(&code, limits)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualReport {
    pub alpha: usize,
    pub beta: usize,
    pub size: usize,
    pub dual_size: usize,
    pub generators: Vec<MixedWord>,
}

impl Report for DualReport {
    fn human(&self) -> String {
        format!(
            "shape: alpha={} beta={}\nsize: {} -> dual size: {}\ndual generators: {}\n",
            self.alpha,
            self.beta,
            self.size,
            self.dual_size,
            words_line(&self.generators)
        )
    }
}

pub fn cmd_dual(path: &Path, limits: &Limits) -> Result<DualReport, CliError> {
    let code = parse_code_file(path)?;
    let dual = code.dual(limits)?;
    Ok(DualReport {
        alpha: code.alpha(),
        beta: code.beta(),
        size: code.size(limits.enumerate)?,
        dual_size: dual.size(limits.enumerate)?,
        generators: dual.generators().to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerateReport {
    pub alpha: usize,
    pub beta: usize,
    pub size: usize,
    pub codewords: Vec<MixedWord>,
}

impl Report for EnumerateReport {
    /// The canonical listing, itself a valid code file.
    fn human(&self) -> String {
        export_codewords(self.alpha, self.beta, &self.codewords)
    }
}

pub fn cmd_enumerate(path: &Path, limits: &Limits) -> Result<EnumerateReport, CliError> {
    let code = parse_code_file(path)?;
    let words = code.enumerate(limits.enumerate)?;
    Ok(EnumerateReport {
        alpha: code.alpha(),
        beta: code.beta(),
        size: words.len(),
        codewords: words.iter().cloned().collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrayReport {
    pub length: usize,
    pub size: usize,
    pub linear: bool,
    pub distances: Vec<usize>,
    pub codewords: Vec<BinaryWord>,
}

impl Report for GrayReport {
    fn human(&self) -> String {
        let mut out = format!(
            "length: {}\nsize: {}\nlinear: {}\ndistances: {}\n",
            self.length,
            self.size,
            self.linear,
            words_line(&self.distances)
        );
        for w in &self.codewords {
            let _ = writeln!(out, "{w}");
        }
        out
    }
}

pub fn cmd_gray(path: &Path, limits: &Limits) -> Result<GrayReport, CliError> {
    let code = parse_code_file(path)?;
    let image = code.gray_image(limits.enumerate)?;
    Ok(GrayReport {
        length: image.length,
        size: image.len(),
        linear: image.is_linear(),
        distances: image.distances().into_iter().collect(),
        codewords: image.words.iter().cloned().collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplicateReport {
    pub t: usize,
    pub alpha: usize,
    pub beta: usize,
    pub generators: Vec<MixedWord>,
    pub relative: Option<(usize, usize)>,
}

impl Report for ReplicateReport {
    fn human(&self) -> String {
        let mut out = format!(
            "t: {}\nshape: alpha={} beta={}\ngenerators: {}\n",
            self.t,
            self.alpha,
            self.beta,
            words_line(&self.generators)
        );
        let _ = match self.relative {
            Some((m1, m)) => writeln!(out, "relative two-weight: C({m1}, {m})"),
            None => writeln!(out, "relative two-weight: no"),
        };
        out
    }
}

pub fn cmd_replicate(path: &Path, t: usize, limits: &Limits) -> Result<ReplicateReport, CliError> {
    let code = parse_code_file(path)?;
    let rep = code.replicate(t)?;
    let relative = if rep.is_zero_code() {
        None
    } else {
        find_relative_structure(&rep, limits.enumerate)?.map(|r| (r.m1, r.m))
    };
    Ok(ReplicateReport {
        t,
        alpha: rep.alpha(),
        beta: rep.beta(),
        generators: rep.generators().to_vec(),
        relative,
    })
}

impl Report for PAutReport {
    fn human(&self) -> String {
        let mut out = format!("order: {}\n", self.order);
        if let Some(f) = self.formula_order {
            let verdict = if self.formula_matches == Some(true) {
                "matches"
            } else {
                "differs"
            };
            let _ = writeln!(out, "formula: {f} ({verdict})");
        }
        for (s, t) in &self.elements {
            let _ = writeln!(out, "({s}, {t})");
        }
        out
    }
}

/// Without `formula` the closed-form fields are left empty.
pub fn cmd_paut(path: &Path, formula: bool, limits: &Limits) -> Result<PAutReport, CliError> {
    let code = parse_code_file(path)?;
    let mut report = paut_report(&code, limits)?;
    if !formula {
        report.formula_order = None;
        report.formula_matches = None;
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivReport {
    pub equivalent: bool,
    pub witness: Option<PermPair>,
}

impl Report for EquivReport {
    fn human(&self) -> String {
        match &self.witness {
            Some(w) => format!("equivalent: yes\nwitness: {w}\n"),
            None => "equivalent: no\n".into(),
        }
    }

    fn exit_code(&self) -> i32 {
        if self.equivalent {
            0
        } else {
            EXIT_NOT_FOUND
        }
    }
}

/// Checks the witness by comparing codeword sets before reporting it.
pub fn cmd_equiv(a: &Path, b: &Path, limits: &Limits) -> Result<EquivReport, CliError> {
    let c1 = parse_code_file(a)?;
    let c2 = parse_code_file(b)?;
    let witness = find_equivalence(&c1, &c2, limits)?;
    if let Some(w) = &witness {
        let ok = image_code(w, &c1)?.same_codewords(&c2, limits.enumerate)?;
        assert!(ok, "equivalence witness does not map the codes");
    }
    Ok(EquivReport {
        equivalent: witness.is_some(),
        witness,
    })
}

impl Report for AuditReport {
    fn human(&self) -> String {
        let mut out = format!("shape: alpha={} beta={}\n", self.alpha, self.beta);
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{:<28} {:<15} {}",
                e.id,
                e.status.to_string(),
                e.details
            );
            if let Some(c) = &e.counterexample {
                let _ = writeln!(out, "{:<28} counterexample: {c}", "");
            }
        }
        out
    }
}

pub fn cmd_check_theorems(path: &Path, t: usize, limits: &Limits) -> Result<AuditReport, CliError> {
    let code: AdditiveCode = parse_code_file(path)?;
    Ok(check_theorems(&code, limits, t))
}
