//! Executable forms of the algebraic laws behind the fold/unfold equivalence.
//!
//! Each checker evaluates both sides of an identity on generated or
//! enumerated inputs and returns a [`LawReport`]. Checkers run against an
//! [`Operators`] table, normally the library's own operations; the
//! deliberately broken tables from [`Mutant`] exist so that the checks
//! themselves can be shown to detect faults.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::construct::{self, classic_instructions, curve_len, stream_prefix, stream_turn_at, Rot};
use crate::paperfold::creases;
use crate::turn::{self, curve_map_inv, curve_reverse, AlternatingStream, Curve, Turn};

/// At most this many failures are kept per report; `failure_count` has the total.
pub const MAX_RECORDED_FAILURES: usize = 64;

/// Largest instruction-list length accepted by the exhaustive checker.
pub const MAX_EXHAUSTIVE_LEN: usize = 16;

/// Largest classic order accepted by the length and prefix checks.
pub const MAX_CLASSIC_ORDER: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawId {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    Naturality,
    Duality1,
    Duality2,
    Length,
    Prefix,
    Equivalence,
    StreamIndex,
    Paperfold,
}

impl LawId {
    pub const ALL: [LawId; 13] = [
        LawId::Eq1,
        LawId::Eq2,
        LawId::Eq3,
        LawId::Eq4,
        LawId::Eq5,
        LawId::Naturality,
        LawId::Duality1,
        LawId::Duality2,
        LawId::Length,
        LawId::Prefix,
        LawId::Equivalence,
        LawId::StreamIndex,
        LawId::Paperfold,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            LawId::Eq1 => "eq1",
            LawId::Eq2 => "eq2",
            LawId::Eq3 => "eq3",
            LawId::Eq4 => "eq4",
            LawId::Eq5 => "eq5",
            LawId::Naturality => "naturality",
            LawId::Duality1 => "duality1",
            LawId::Duality2 => "duality2",
            LawId::Length => "length",
            LawId::Prefix => "prefix",
            LawId::Equivalence => "equivalence",
            LawId::StreamIndex => "stream-index",
            LawId::Paperfold => "paperfold",
        }
    }

    // Distinct per law so every checker draws an independent sequence.
    fn stream_id(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LawId {
    type Err = String;

    fn from_str(s: &str) -> Result<LawId, String> {
        LawId::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown law {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Index of the case within its law's case sequence.
    pub case: u64,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    /// First position where the two sequences differ, when both are curves.
    pub first_mismatch: Option<usize>,
}

/// Outcome of searching for inputs that violate a law's side condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub condition: &'static str,
    pub cases_probed: u64,
    pub violations: u64,
    pub first_counterexample: Option<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    #[serde(rename = "law_id")]
    pub law: LawId,
    pub seed: Option<u64>,
    pub cases_run: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe: Option<ProbeReport>,
}

impl LawReport {
    fn new(law: LawId, seed: Option<u64>) -> Self {
        LawReport {
            law,
            seed,
            cases_run: 0,
            failure_count: 0,
            failures: Vec::new(),
            probe: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, failure: Option<Failure>) {
        self.cases_run += 1;
        if let Some(f) = failure {
            self.push_failure(f);
        }
    }

    fn push_failure(&mut self, f: Failure) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(f);
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<13} {}  cases={}",
            self.law.as_str(),
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases_run
        )?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        if !self.passed() {
            write!(f, " failures={}", self.failure_count)?;
        }
        if let Some(p) = &self.probe {
            write!(
                f,
                "\n  probe [{}]: {} of {} cases violate the law",
                p.condition, p.violations, p.cases_probed
            )?;
            if let Some(c) = &p.first_counterexample {
                write!(f, "; first: {} gives {} vs {}", c.inputs, c.expected, c.actual)?;
            }
        }
        for x in &self.failures {
            write!(f, "\n  case {}: {}", x.case, x.inputs)?;
            if let Some(i) = x.first_mismatch {
                write!(f, " (first mismatch at index {i})")?;
            }
            write!(f, "\n    expected: {}\n    actual:   {}", x.expected, x.actual)?;
        }
        if self.failure_count > self.failures.len() as u64 {
            write!(f, "\n  ... {} more", self.failure_count - self.failures.len() as u64)?;
        }
        Ok(())
    }
}

/// Seeded source of random curves and instruction lists.
///
/// Curve lengths are uniform over `[min_len, max_len]` (odd values only where
/// a law needs it) and every turn is a fair coin. The generator is ChaCha8
/// seeded with `seed`, with one ChaCha stream per law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseGenerator {
    pub seed: u64,
    pub min_len: usize,
    pub max_len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Parity {
    Any,
    Odd,
}

impl CaseGenerator {
    pub fn new(seed: u64, min_len: usize, max_len: usize) -> Self {
        assert!(min_len <= max_len, "min_len {min_len} exceeds max_len {max_len}");
        CaseGenerator { seed, min_len, max_len }
    }

    fn rng(&self, law: LawId) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(law.stream_id());
        rng
    }

    fn len(&self, rng: &mut ChaCha8Rng, parity: Parity) -> usize {
        match parity {
            Parity::Any => rng.gen_range(self.min_len..=self.max_len),
            Parity::Odd => {
                let lo = self.min_len | 1;
                let hi = if self.max_len % 2 == 1 { self.max_len } else { self.max_len.saturating_sub(1) };
                if hi < lo {
                    return lo;
                }
                lo + 2 * rng.gen_range(0..=(hi - lo) / 2)
            }
        }
    }

    fn curve(&self, rng: &mut ChaCha8Rng, parity: Parity) -> Curve {
        let n = self.len(rng, parity);
        random_curve(rng, n)
    }
}

impl Default for CaseGenerator {
    fn default() -> Self {
        CaseGenerator::new(42, 0, 999)
    }
}

fn random_turn(rng: &mut ChaCha8Rng) -> Turn {
    if rng.gen::<bool>() {
        Turn::L
    } else {
        Turn::R
    }
}

fn random_curve(rng: &mut ChaCha8Rng, n: usize) -> Curve {
    (0..n).map(|_| random_turn(rng)).collect()
}

fn random_rot(rng: &mut ChaCha8Rng) -> Rot {
    if rng.gen::<bool>() {
        Rot::C
    } else {
        Rot::A
    }
}

/// The operations a law suite is evaluated against.
#[derive(Clone, Copy)]
pub struct Operators {
    pub interleave: fn(AlternatingStream, &[Turn]) -> Curve,
    pub unfold_step: fn(Rot, &[Turn]) -> Curve,
    pub fold_step: fn(&[Turn], Rot) -> Curve,
}

impl fmt::Debug for Operators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Operators").finish_non_exhaustive()
    }
}

impl Default for Operators {
    fn default() -> Self {
        Operators::REFERENCE
    }
}

impl Operators {
    pub const REFERENCE: Operators = Operators {
        interleave: turn::interleave,
        unfold_step: construct::unfold_step,
        fold_step: construct::fold_step,
    };

    pub fn mutant(m: Mutant) -> Operators {
        match m {
            Mutant::InterleaveDropsLast => Operators {
                interleave: mutants::interleave_drops_last,
                fold_step: mutants::fold_step_drops_last,
                ..Operators::REFERENCE
            },
            Mutant::UnfoldSkipsInversion => Operators {
                unfold_step: mutants::unfold_skips_inversion,
                ..Operators::REFERENCE
            },
            Mutant::FoldSwapsStreams => Operators {
                fold_step: mutants::fold_swaps_streams,
                ..Operators::REFERENCE
            },
        }
    }

    pub fn dragon_unfold(&self, rs: &[Rot]) -> Curve {
        rs.iter().rev().fold(Curve::new(), |ts, &r| (self.unfold_step)(r, &ts))
    }

    pub fn dragon_fold(&self, rs: &[Rot]) -> Curve {
        rs.iter().fold(Curve::new(), |ts, &r| (self.fold_step)(&ts, r))
    }
}

/// Deliberately wrong operator tables used to show the checks have teeth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutant {
    /// Interleave omits the trailing stream element.
    InterleaveDropsLast,
    /// Unfolding appends the reversed copy without inverting its turns.
    UnfoldSkipsInversion,
    /// Folding interleaves `rl` for `C` and `lr` for `A`.
    FoldSwapsStreams,
}

impl Mutant {
    pub const ALL: [Mutant; 3] = [
        Mutant::InterleaveDropsLast,
        Mutant::UnfoldSkipsInversion,
        Mutant::FoldSwapsStreams,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            Mutant::InterleaveDropsLast => "interleave-drops-last",
            Mutant::UnfoldSkipsInversion => "unfold-skips-inversion",
            Mutant::FoldSwapsStreams => "fold-swaps-streams",
        }
    }
}

impl FromStr for Mutant {
    type Err = String;

    fn from_str(s: &str) -> Result<Mutant, String> {
        Mutant::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown mutant {s:?}"))
    }
}

mod mutants {
    use super::*;

    pub(super) fn interleave_drops_last(s: AlternatingStream, xs: &[Turn]) -> Curve {
        let mut out = turn::interleave(s, xs);
        out.truncate(2 * xs.len());
        out
    }

    pub(super) fn fold_step_drops_last(ts: &[Turn], r: Rot) -> Curve {
        interleave_drops_last(r.stream(), ts)
    }

    pub(super) fn unfold_skips_inversion(r: Rot, ts: &[Turn]) -> Curve {
        let mut out: Curve = ts.into();
        out.push(r.pivot());
        ts.iter().rev().for_each(|&t| out.push(t));
        out
    }

    pub(super) fn fold_swaps_streams(ts: &[Turn], r: Rot) -> Curve {
        turn::interleave(r.stream().tail(), ts)
    }
}

fn concat(parts: &[&[Turn]]) -> Curve {
    let mut out = Curve::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        for &t in *p {
            out.push(t);
        }
    }
    out
}

fn text(xs: &[Turn]) -> String {
    if xs.is_empty() {
        "[]".to_string()
    } else {
        xs.iter().map(|t| t.as_char()).collect()
    }
}

fn rots_text(rs: &[Rot]) -> String {
    if rs.is_empty() {
        "[]".to_string()
    } else {
        rs.iter().map(|r| r.as_char()).collect()
    }
}

fn first_mismatch(a: &[Turn], b: &[Turn]) -> Option<usize> {
    a.iter()
        .zip(b)
        .position(|(x, y)| x != y)
        .or_else(|| (a.len() != b.len()).then(|| a.len().min(b.len())))
}

/// `None` when the two sides agree.
fn compare(case: u64, inputs: impl FnOnce() -> String, lhs: &[Turn], rhs: &[Turn]) -> Option<Failure> {
    first_mismatch(lhs, rhs).map(|i| Failure {
        case,
        inputs: inputs(),
        expected: text(lhs),
        actual: text(rhs),
        first_mismatch: Some(i),
    })
}

const STREAMS: [AlternatingStream; 2] = [AlternatingStream::lr(), AlternatingStream::rl()];

/// Every curve of length `n`, in binary counting order (`L` = 0).
fn all_curves(n: usize) -> impl Iterator<Item = Curve> {
    (0u64..1 << n).map(move |bits| {
        (0..n)
            .map(|i| if bits >> i & 1 == 0 { Turn::L } else { Turn::R })
            .collect()
    })
}

/// Law checkers bound to an operator table and a case generator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Verifier {
    pub ops: Operators,
    pub gen: CaseGenerator,
}

impl Verifier {
    pub fn new(gen: CaseGenerator) -> Self {
        Verifier { ops: Operators::REFERENCE, gen }
    }

    pub fn with_ops(gen: CaseGenerator, ops: Operators) -> Self {
        Verifier { ops, gen }
    }

    fn il(&self, s: AlternatingStream, xs: &[Turn]) -> Curve {
        (self.ops.interleave)(s, xs)
    }

    fn eq2_sides(&self, s: AlternatingStream, xs: &[Turn], z: Turn, ys: &[Turn]) -> (Curve, Curve) {
        let lhs = self.il(s, &concat(&[xs, &[z], ys]));
        let rhs = concat(&[&self.il(s, xs), &[z], &self.il(s, ys)]);
        (lhs, rhs)
    }

    fn eq4_sides(&self, s: AlternatingStream, xs: &[Turn]) -> (Curve, Curve) {
        let lhs = curve_reverse(&self.il(s, xs));
        let rhs = self.il(s.map_inv(), &curve_reverse(xs));
        (lhs, rhs)
    }

    /// Recursive pattern of the unfolding construction, met by the folding
    /// construction on classic orders `0..max_n`.
    pub fn check_eq1(&self, max_n: usize) -> LawReport {
        let mut report = LawReport::new(LawId::Eq1, None);
        for n in 0..max_n.min(MAX_CLASSIC_ORDER) {
            let prev = self.ops.dragon_fold(&classic_instructions(n));
            let lhs = self.ops.dragon_fold(&classic_instructions(n + 1));
            let rhs = (self.ops.unfold_step)(Rot::C, &prev);
            report.record(compare(n as u64, || format!("n={n}"), &lhs, &rhs));
        }
        report
    }

    /// Interleave distributes over `xs ++ [z] ++ ys` when `xs` has odd length.
    ///
    /// Also probes every even-length `xs` up to six turns (with `ys` up to two)
    /// to show the odd-length hypothesis is needed.
    pub fn check_eq2(&self, cases: u64) -> LawReport {
        let mut rng = self.gen.rng(LawId::Eq2);
        let mut report = LawReport::new(LawId::Eq2, Some(self.gen.seed));
        for case in 0..cases {
            let xs = self.gen.curve(&mut rng, Parity::Odd);
            let z = random_turn(&mut rng);
            let ys = self.gen.curve(&mut rng, Parity::Any);
            let mut failure = None;
            for s in STREAMS {
                let (lhs, rhs) = self.eq2_sides(s, &xs, z, &ys);
                failure = failure.or_else(|| {
                    compare(case, || format!("stream={s} xs={} z={z} ys={}", text(&xs), text(&ys)), &lhs, &rhs)
                });
            }
            report.record(failure);
        }

        let mut probe = ProbeReport {
            condition: "even-length xs",
            cases_probed: 0,
            violations: 0,
            first_counterexample: None,
        };
        for xs_len in (0..=6).step_by(2) {
            for xs in all_curves(xs_len) {
                for z in Turn::ALL {
                    for ys in (0..=2).flat_map(all_curves) {
                        for s in STREAMS {
                            let (lhs, rhs) = self.eq2_sides(s, &xs, z, &ys);
                            let case = probe.cases_probed;
                            probe.cases_probed += 1;
                            if let Some(f) = compare(
                                case,
                                || format!("stream={s} xs={} z={z} ys={}", text(&xs), text(&ys)),
                                &lhs,
                                &rhs,
                            ) {
                                probe.violations += 1;
                                probe.first_counterexample.get_or_insert(f);
                            }
                        }
                    }
                }
            }
        }
        report.probe = Some(probe);
        report
    }

    /// `s ▷ map inv xs = map inv (map inv s ▷ xs)`.
    pub fn check_eq3(&self, cases: u64) -> LawReport {
        let mut rng = self.gen.rng(LawId::Eq3);
        let mut report = LawReport::new(LawId::Eq3, Some(self.gen.seed));
        for case in 0..cases {
            let xs = self.gen.curve(&mut rng, Parity::Any);
            let mut failure = None;
            for s in STREAMS {
                let lhs = self.il(s, &curve_map_inv(&xs));
                let rhs = curve_map_inv(&self.il(s.map_inv(), &xs));
                failure = failure.or_else(|| compare(case, || format!("stream={s} xs={}", text(&xs)), &lhs, &rhs));
            }
            report.record(failure);
        }
        report
    }

    /// `reverse (s ▷ xs) = map inv s ▷ reverse xs` when `xs` has odd length,
    /// with an even-length probe up to six turns.
    pub fn check_eq4(&self, cases: u64) -> LawReport {
        let mut rng = self.gen.rng(LawId::Eq4);
        let mut report = LawReport::new(LawId::Eq4, Some(self.gen.seed));
        for case in 0..cases {
            let xs = self.gen.curve(&mut rng, Parity::Odd);
            let mut failure = None;
            for s in STREAMS {
                let (lhs, rhs) = self.eq4_sides(s, &xs);
                failure = failure.or_else(|| compare(case, || format!("stream={s} xs={}", text(&xs)), &lhs, &rhs));
            }
            report.record(failure);
        }

        let mut probe = ProbeReport {
            condition: "even-length xs",
            cases_probed: 0,
            violations: 0,
            first_counterexample: None,
        };
        for xs in (0..=6).step_by(2).flat_map(all_curves) {
            for s in STREAMS {
                let (lhs, rhs) = self.eq4_sides(s, &xs);
                let case = probe.cases_probed;
                probe.cases_probed += 1;
                if let Some(f) = compare(case, || format!("stream={s} xs={}", text(&xs)), &lhs, &rhs) {
                    probe.violations += 1;
                    probe.first_counterexample.get_or_insert(f);
                }
            }
        }
        report.probe = Some(probe);
        report
    }

    /// `s ▷ (xs ++ [p] ++ map inv (reverse xs)) = (s ▷ xs) ++ [p] ++ map inv (reverse (s ▷ xs))`
    /// for any `xs`, both streams and both pivots.
    pub fn check_eq5(&self, cases: u64) -> LawReport {
        let mut rng = self.gen.rng(LawId::Eq5);
        let mut report = LawReport::new(LawId::Eq5, Some(self.gen.seed));
        for case in 0..cases {
            let xs = self.gen.curve(&mut rng, Parity::Any);
            let xs_back = curve_map_inv(&curve_reverse(&xs));
            let mut failure = None;
            for s in STREAMS {
                let folded = self.il(s, &xs);
                let folded_back = curve_map_inv(&curve_reverse(&folded));
                for p in Turn::ALL {
                    let lhs = self.il(s, &concat(&[&xs, &[p], &xs_back]));
                    let rhs = concat(&[&folded, &[p], &folded_back]);
                    failure = failure.or_else(|| {
                        compare(case, || format!("stream={s} pivot={p} xs={}", text(&xs)), &lhs, &rhs)
                    });
                }
            }
            report.record(failure);
        }
        report
    }

    /// `map f (s ▷ xs) = map f s ▷ map f xs` for `f` in `{id, inv}`.
    pub fn check_naturality(&self, cases: u64) -> LawReport {
        let mut rng = self.gen.rng(LawId::Naturality);
        let mut report = LawReport::new(LawId::Naturality, Some(self.gen.seed));
        for case in 0..cases {
            let xs = self.gen.curve(&mut rng, Parity::Any);
            let mut failure = None;
            for s in STREAMS {
                let direct = self.il(s, &xs);
                let inv_lhs = curve_map_inv(&direct);
                let inv_rhs = self.il(s.map_inv(), &curve_map_inv(&xs));
                // f = id: both sides are s ▷ xs.
                let id_rhs = self.il(s, &xs.iter().copied().collect::<Curve>());
                failure = failure
                    .or_else(|| compare(case, || format!("f=id stream={s} xs={}", text(&xs)), &direct, &id_rhs))
                    .or_else(|| compare(case, || format!("f=inv stream={s} xs={}", text(&xs)), &inv_lhs, &inv_rhs));
            }
            report.record(failure);
        }
        report
    }

    /// Both hypotheses of the second duality theorem for `unfold_step` and
    /// `fold_step` with seed `[]`.
    pub fn check_duality_conditions(&self, cases: u64) -> [LawReport; 2] {
        let mut cond1 = LawReport::new(LawId::Duality1, None);
        for (case, r) in Rot::ALL.into_iter().enumerate() {
            let lhs = (self.ops.unfold_step)(r, &[]);
            let rhs = (self.ops.fold_step)(&[], r);
            cond1.record(compare(case as u64, || format!("r={r}"), &lhs, &rhs));
        }

        let mut rng = self.gen.rng(LawId::Duality2);
        let mut cond2 = LawReport::new(LawId::Duality2, Some(self.gen.seed));
        for case in 0..cases {
            let ts = self.gen.curve(&mut rng, Parity::Any);
            let mut failure = None;
            for r in Rot::ALL {
                for s in Rot::ALL {
                    let lhs = (self.ops.unfold_step)(r, &(self.ops.fold_step)(&ts, s));
                    let rhs = (self.ops.fold_step)(&(self.ops.unfold_step)(r, &ts), s);
                    failure = failure
                        .or_else(|| compare(case, || format!("r={r} s={s} ts={}", text(&ts)), &lhs, &rhs));
                }
            }
            cond2.record(failure);
        }
        [cond1, cond2]
    }

    /// Unfolding and folding agree on every instruction list of length
    /// `0..=max_len`. Runs in parallel; the report does not depend on
    /// scheduling.
    pub fn check_equivalence_exhaustive(&self, max_len: usize) -> LawReport {
        let max_len = max_len.min(MAX_EXHAUSTIVE_LEN);
        let total: u64 = (1u64 << (max_len + 1)) - 1;
        let mut report = LawReport::new(LawId::Equivalence, None);
        let ops = self.ops;
        let check = move |case: u64| {
            // Case index k enumerates lists by length, then by bit pattern.
            let len = 63 - (case + 1).leading_zeros() as usize;
            let bits = case + 1 - (1u64 << len);
            let rs: Vec<Rot> = (0..len)
                .map(|i| if bits >> i & 1 == 0 { Rot::C } else { Rot::A })
                .collect();
            let u = ops.dragon_unfold(&rs);
            let f = ops.dragon_fold(&rs);
            compare(case, || format!("rs={}", rots_text(&rs)), &u, &f)
        };
        const CHUNK: u64 = 4096;
        let mut start = 0;
        while start < total {
            let end = (start + CHUNK).min(total);
            let failures: Vec<Failure> = (start..end).into_par_iter().filter_map(check).collect();
            report.cases_run += end - start;
            for f in failures {
                report.push_failure(f);
            }
            start = end;
        }
        report
    }

    /// Curve length `2^n - 1` for classic orders `0..=max_n` and for `cases`
    /// random lists of up to `max_rots` instructions; and each classic curve
    /// is a prefix of the next order and of the infinite stream.
    pub fn check_length_and_prefix(&self, max_n: usize, cases: u64, max_rots: usize) -> [LawReport; 2] {
        let max_n = max_n.min(MAX_CLASSIC_ORDER);
        let mut length = LawReport::new(LawId::Length, Some(self.gen.seed));
        let mut prefix = LawReport::new(LawId::Prefix, None);

        let mut curves: Vec<Curve> = Vec::with_capacity(max_n + 2);
        for n in 0..=max_n + 1 {
            curves.push(self.ops.dragon_fold(&classic_instructions(n)));
        }
        for n in 0..=max_n {
            let got = curves[n].len();
            let want = curve_len(n);
            length.record((got != want).then(|| Failure {
                case: n as u64,
                inputs: format!("classic n={n}"),
                expected: want.to_string(),
                actual: got.to_string(),
                first_mismatch: None,
            }));

            let next = &curves[n + 1];
            let head = &next[..curves[n].len().min(next.len())];
            prefix.record(compare(2 * n as u64, || format!("order {n} within order {}", n + 1), &curves[n], head));
            let from_stream = stream_prefix(curve_len(n));
            prefix.record(compare(2 * n as u64 + 1, || format!("stream prefix of length 2^{n}-1"), &curves[n], &from_stream));
        }

        let mut rng = self.gen.rng(LawId::Length);
        let max_rots = max_rots.min(MAX_EXHAUSTIVE_LEN);
        for case in 0..cases {
            let k = rng.gen_range(0..=max_rots);
            let rs: Vec<Rot> = (0..k).map(|_| random_rot(&mut rng)).collect();
            let got = self.ops.dragon_fold(&rs).len();
            let want = curve_len(k);
            length.record((got != want).then(|| Failure {
                case: (max_n + 1) as u64 + case,
                inputs: format!("rs={}", rots_text(&rs)),
                expected: want.to_string(),
                actual: got.to_string(),
                first_mismatch: None,
            }));
        }
        [length, prefix]
    }

    /// The positional formula agrees with the stream prefix at `1..=count`.
    pub fn check_stream_index(&self, count: usize) -> LawReport {
        let mut report = LawReport::new(LawId::StreamIndex, None);
        let prefix = stream_prefix(count);
        for i in 1..=count {
            let got = stream_turn_at(i as u64).expect("positions start at 1");
            let want = prefix[i - 1];
            report.record((got != want).then(|| Failure {
                case: i as u64,
                inputs: format!("i={i}"),
                expected: want.to_string(),
                actual: got.to_string(),
                first_mismatch: None,
            }));
        }
        report
    }

    /// Strip-folding creases agree with both constructions for orders `0..=max_n`.
    pub fn check_paperfold(&self, max_n: u32) -> LawReport {
        let mut report = LawReport::new(LawId::Paperfold, None);
        for n in 0..=max_n.min(MAX_CLASSIC_ORDER as u32) {
            let paper = creases(n).expect("order within the fold cap");
            let rs = classic_instructions(n as usize);
            let fold = self.ops.dragon_fold(&rs);
            let unfold = self.ops.dragon_unfold(&rs);
            let failure = compare(n as u64, || format!("fold n={n}"), &paper, &fold)
                .or_else(|| compare(n as u64, || format!("unfold n={n}"), &paper, &unfold));
            report.record(failure);
        }
        report
    }
}

/// What a suite run covers.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub laws: Vec<LawId>,
    /// Random cases per randomized law.
    pub cases: u64,
    /// Longest instruction list in the exhaustive check, and the highest
    /// classic order in the order-indexed checks.
    pub max_len: usize,
    pub gen: CaseGenerator,
    pub ops: Operators,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            laws: LawId::ALL.to_vec(),
            cases: 1000,
            max_len: 12,
            gen: CaseGenerator::default(),
            ops: Operators::REFERENCE,
        }
    }
}

/// Length of the stream prefix checked by [`LawId::StreamIndex`] in a suite run.
pub const SUITE_STREAM_INDEX_COUNT: usize = 100_000;

/// Runs the selected laws in the order of [`LawId::ALL`].
pub fn run_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let v = Verifier::with_ops(cfg.gen, cfg.ops);
    let wants = |l: LawId| cfg.laws.contains(&l);
    let order = cfg.max_len.min(MAX_CLASSIC_ORDER);
    let mut out = Vec::new();
    for law in LawId::ALL {
        if !wants(law) {
            continue;
        }
        match law {
            LawId::Eq1 => out.push(v.check_eq1(order)),
            LawId::Eq2 => out.push(v.check_eq2(cfg.cases)),
            LawId::Eq3 => out.push(v.check_eq3(cfg.cases)),
            LawId::Eq4 => out.push(v.check_eq4(cfg.cases)),
            LawId::Eq5 => out.push(v.check_eq5(cfg.cases)),
            LawId::Naturality => out.push(v.check_naturality(cfg.cases)),
            LawId::Duality1 => out.push(v.check_duality_conditions(0)[0].clone()),
            LawId::Duality2 => {
                let [_, d2] = v.check_duality_conditions(cfg.cases);
                out.push(d2);
            }
            LawId::Length => out.push(v.check_length_and_prefix(order, cfg.cases, MAX_EXHAUSTIVE_LEN)[0].clone()),
            LawId::Prefix => out.push(v.check_length_and_prefix(order, 0, 0)[1].clone()),
            LawId::Equivalence => out.push(v.check_equivalence_exhaustive(cfg.max_len)),
            LawId::StreamIndex => out.push(v.check_stream_index(SUITE_STREAM_INDEX_COUNT)),
            LawId::Paperfold => out.push(v.check_paperfold(order as u32)),
        }
    }
    out
}

pub fn check_eq2(gen: &CaseGenerator, cases: u64) -> LawReport {
    Verifier::new(*gen).check_eq2(cases)
}

pub fn check_eq3(gen: &CaseGenerator, cases: u64) -> LawReport {
    Verifier::new(*gen).check_eq3(cases)
}

pub fn check_eq4(gen: &CaseGenerator, cases: u64) -> LawReport {
    Verifier::new(*gen).check_eq4(cases)
}

pub fn check_eq5(gen: &CaseGenerator, cases: u64) -> LawReport {
    Verifier::new(*gen).check_eq5(cases)
}

pub fn check_naturality(gen: &CaseGenerator, cases: u64) -> LawReport {
    Verifier::new(*gen).check_naturality(cases)
}

pub fn check_duality_conditions(gen: &CaseGenerator, cases: u64) -> [LawReport; 2] {
    Verifier::new(*gen).check_duality_conditions(cases)
}

pub fn check_equivalence_exhaustive(max_len: usize) -> LawReport {
    Verifier::default().check_equivalence_exhaustive(max_len)
}

pub fn check_length_and_prefix(gen: &CaseGenerator, max_n: usize, cases: u64) -> [LawReport; 2] {
    Verifier::new(*gen).check_length_and_prefix(max_n, cases, MAX_EXHAUSTIVE_LEN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Turn::{L, R};

    fn c(s: &str) -> Curve {
        s.parse().unwrap()
    }

    fn small() -> CaseGenerator {
        CaseGenerator::new(7, 0, 40)
    }

    #[test]
    fn law_ids_round_trip() {
        for l in LawId::ALL {
            assert_eq!(l.as_str().parse::<LawId>(), Ok(l));
            assert_eq!(serde_json::to_string(&l).unwrap(), format!("\"{}\"", l.as_str()));
        }
        assert!("eq9".parse::<LawId>().is_err());
    }

    #[test]
    fn eq2_hand_examples() {
        let v = Verifier::default();
        let (lhs, rhs) = v.eq2_sides(AlternatingStream::lr(), &[L], L, &[]);
        assert_eq!(lhs, c("LLRLL"));
        assert_eq!(rhs, c("LLRLL"));
        let (a, b, cc, z, d, e) = (R, R, L, R, L, L);
        let (lhs, rhs) = v.eq2_sides(AlternatingStream::lr(), &[a, b, cc], z, &[d, e]);
        let want: Curve = vec![L, a, R, b, L, cc, R, z, L, d, R, e, L].into();
        assert_eq!(lhs, want);
        assert_eq!(rhs, want);
    }

    #[test]
    fn eq3_and_eq4_hand_examples() {
        let lr = AlternatingStream::lr();
        let lhs = turn::interleave(lr, &curve_map_inv(&[]));
        let rhs = curve_map_inv(&turn::interleave(lr.map_inv(), &[]));
        assert_eq!((lhs, rhs), (c("L"), c("L")));
        let lhs = turn::interleave(lr, &curve_map_inv(&[L]));
        let rhs = curve_map_inv(&turn::interleave(lr.map_inv(), &[L]));
        assert_eq!((lhs, rhs), (c("LRR"), c("LRR")));

        let v = Verifier::default();
        assert_eq!(v.eq4_sides(lr, &[L]), (c("RLL"), c("RLL")));
        let (a, b, cc) = (L, L, R);
        let (lhs, rhs) = v.eq4_sides(lr, &[a, b, cc]);
        let want: Curve = vec![R, cc, L, b, R, a, L].into();
        assert_eq!((lhs, rhs), (want.clone(), want));
    }

    #[test]
    fn eq5_even_length_example() {
        let (a, b) = (R, L);
        let xs = [a, b];
        let lr = AlternatingStream::lr();
        let lhs = turn::interleave(lr, &concat(&[&xs, &[L], &curve_map_inv(&curve_reverse(&xs))]));
        let want: Curve = vec![L, a, R, b, L, L, R, b.inv(), L, a.inv(), R].into();
        assert_eq!(lhs, want);
        let folded = turn::interleave(lr, &xs);
        let rhs = concat(&[&folded, &[L], &curve_map_inv(&curve_reverse(&folded))]);
        assert_eq!(rhs, want);
        assert_eq!(turn::interleave(lr, &[L]), c("LLR"));
    }

    #[test]
    fn reference_laws_pass_small() {
        let v = Verifier::new(small());
        for r in [
            v.check_eq1(10),
            v.check_eq2(200),
            v.check_eq3(200),
            v.check_eq4(200),
            v.check_eq5(200),
            v.check_naturality(200),
            v.check_equivalence_exhaustive(8),
            v.check_stream_index(5000),
            v.check_paperfold(8),
        ] {
            assert!(r.passed(), "{r}");
        }
        for r in v.check_duality_conditions(200).into_iter().chain(v.check_length_and_prefix(12, 100, 12)) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn probes_find_even_counterexamples() {
        let v = Verifier::new(small());
        for r in [v.check_eq2(10), v.check_eq4(10)] {
            let p = r.probe.expect("probe recorded");
            assert!(p.violations > 0);
            assert!(p.first_counterexample.is_some());
        }
    }

    #[test]
    fn odd_lengths_are_odd() {
        let g = CaseGenerator::new(1, 0, 10);
        let mut rng = g.rng(LawId::Eq2);
        for _ in 0..500 {
            let n = g.len(&mut rng, Parity::Odd);
            assert!(n % 2 == 1 && n <= 9, "{n}");
        }
        let g = CaseGenerator::new(1, 4, 4);
        assert_eq!(g.len(&mut g.rng(LawId::Eq2), Parity::Odd), 5);
    }

    #[test]
    fn reports_are_reproducible() {
        let a = check_eq5(&CaseGenerator::new(99, 0, 60), 50);
        let b = check_eq5(&CaseGenerator::new(99, 0, 60), 50);
        assert_eq!(a, b);
        let m = Operators::mutant(Mutant::UnfoldSkipsInversion);
        let x = Verifier::with_ops(CaseGenerator::new(5, 0, 30), m).check_duality_conditions(40);
        let y = Verifier::with_ops(CaseGenerator::new(5, 0, 30), m).check_duality_conditions(40);
        assert_eq!(x, y);
        assert!(!x[1].passed());
    }

    #[test]
    fn every_mutant_is_caught() {
        for m in Mutant::ALL {
            let cfg = SuiteConfig {
                cases: 50,
                max_len: 6,
                gen: small(),
                ops: Operators::mutant(m),
                ..Default::default()
            };
            let reports = run_suite(&cfg);
            assert!(reports.iter().any(|r| !r.passed()), "{} survived", m.as_str());
        }
    }

    #[test]
    fn equivalence_failures_are_ordered_and_capped() {
        let v = Verifier::with_ops(small(), Operators::mutant(Mutant::FoldSwapsStreams));
        let r = v.check_equivalence_exhaustive(10);
        assert_eq!(r.cases_run, 2047);
        // Only the empty list survives the swap.
        assert_eq!(r.failure_count, 2046);
        assert_eq!(r.failures.len(), MAX_RECORDED_FAILURES);
        assert!(r.failures.windows(2).all(|w| w[0].case < w[1].case));
        assert_eq!(r.failures[0].inputs, "rs=C");
    }

    #[test]
    fn json_shape() {
        let r = check_eq4(&small(), 3);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["law_id"], "eq4");
        assert_eq!(v["seed"], 7);
        assert_eq!(v["cases_run"], 3);
        assert!(v["failures"].as_array().unwrap().is_empty());
    }
}
