//! Acceptance criteria, one line per criterion.
//!
//! Runs without the libtest harness so every criterion executes in order on
//! a quiet machine and prints its verdict even when it passes.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dragoncurve::cli;
use dragoncurve::construct::curve_len;
use dragoncurve::geometry::{curve_to_path, distinct_undirected_edges, endpoint, Heading, Point};
use dragoncurve::laws::{CaseGenerator, Mutant, Verifier};
use dragoncurve::paperfold::creases;
use dragoncurve::render::{path_to_svg, RenderOptions};
use dragoncurve::{
    classic_instructions, dragon_fold, dragon_unfold, interleave, stream_prefix, stream_turn_at,
    AlternatingStream, Curve, Instructions, Rot, Turn,
};

const FIGURE_5A: &str = "CACACACACACA";
const FIGURE_5B: &str = "ACAACAAACCCC";

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn classic_path(rs: &[Rot]) -> dragoncurve::geometry::Path {
    curve_to_path(&dragon_fold(rs), Point::ORIGIN, Heading::East)
}

fn c1_known_curves() -> Outcome {
    let start = Instant::now();
    let known = ["L", "LLR", "LLRLLRR", "LLRLLRRLLLRRLRR"];
    for (i, want) in known.iter().enumerate() {
        let got = dragon_unfold(&classic_instructions(i + 1)).to_string();
        ensure(got == *want, || format!("order {}: {got} != {want}", i + 1))?;
    }
    let took = within(Duration::from_millis(1), start)?;
    Ok(format!("orders 1..4 exact in {took:.2?}"))
}

fn c2_exhaustive_equivalence() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let report = pool.install(|| Verifier::default().check_equivalence_exhaustive(12));
    ensure(report.cases_run == 8191, || format!("ran {} lists", report.cases_run))?;
    ensure(report.passed(), || format!("{report}"))?;
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!("8191 lists, 0 mismatches, single thread, {took:.2?}"))
}

fn c3_length_law() -> Outcome {
    let start = Instant::now();
    for n in 0..=20 {
        let len = dragon_fold(&classic_instructions(n)).len();
        ensure(len == (1usize << n) - 1, || format!("order {n}: length {len}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let k = rng.gen_range(0..=16);
        let rs: Vec<Rot> = (0..k).map(|_| if rng.gen() { Rot::C } else { Rot::A }).collect();
        let len = dragon_fold(&rs).len();
        ensure(len == (1usize << k) - 1, || format!("{}: length {len}", Instructions::from(rs.clone())))?;
    }
    let [length, prefix] = Verifier::new(CaseGenerator::new(42, 0, 999)).check_length_and_prefix(20, 1000, 16);
    ensure(length.passed() && prefix.passed(), || format!("{length}\n{prefix}"))?;
    let took = within(Duration::from_secs(5), start)?;
    Ok(format!("n <= 20 and 1000 random lists exact, {took:.2?}"))
}

fn c4_law_suite() -> Outcome {
    let start = Instant::now();
    let v = Verifier::new(CaseGenerator::new(42, 0, 999));
    let [d1, d2] = v.check_duality_conditions(1000);
    let reports = [
        v.check_eq2(1000),
        v.check_eq3(1000),
        v.check_eq4(1000),
        v.check_eq5(1000),
        v.check_naturality(1000),
        d1,
        d2,
    ];
    for r in &reports {
        ensure(r.passed(), || format!("{r}"))?;
        let want = if r.law == dragoncurve::laws::LawId::Duality1 { 2 } else { 1000 };
        ensure(r.cases_run == want, || format!("{} ran {} cases", r.law, r.cases_run))?;
    }
    for r in &reports[..3] {
        if let Some(p) = &r.probe {
            ensure(p.violations >= 1 && p.first_counterexample.is_some(), || {
                format!("{} probe found no even-length counterexample", r.law)
            })?;
        }
    }
    ensure(reports[0].probe.is_some() && reports[2].probe.is_some(), || "probe missing".into())?;
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!(
        "7 laws x 1000 cases clean; probes: eq2 {} / eq4 {} even-length violations; {took:.2?}",
        reports[0].probe.as_ref().unwrap().violations,
        reports[2].probe.as_ref().unwrap().violations
    ))
}

fn c5_worked_examples() -> Outcome {
    use Turn::{L, R};
    let (a, b, c, z, d, e) = (R, L, L, R, R, L);
    let got = interleave(AlternatingStream::lr(), &[a, b, c, z, d, e]);
    let want = vec![L, a, R, b, L, c, R, z, L, d, R, e, L];
    ensure(got.as_slice() == want.as_slice(), || format!("interleave gave {got}"))?;

    let rev: Curve = interleave(AlternatingStream::lr(), &[a, b, c]).reversed();
    let want = vec![R, c, L, b, R, a, L];
    ensure(rev.as_slice() == want.as_slice(), || format!("reverse gave {rev}"))?;
    let other = interleave(AlternatingStream::lr().map_inv(), &[c, b, a]);
    ensure(other == rev, || format!("map inv lr side gave {other}"))?;
    Ok(format!("a..e = {a}{b}{c}{d}{e}, z = {z}; both examples bit-exact"))
}

fn c6_stream_laws() -> Outcome {
    let start = Instant::now();
    for n in 0..=16 {
        let want = dragon_fold(&classic_instructions(n));
        ensure(stream_prefix(curve_len(n)) == want, || format!("prefix at order {n}"))?;
    }
    let prefix = stream_prefix(100_000);
    for i in 1..=100_000u64 {
        let got = stream_turn_at(i).map_err(|e| e.to_string())?;
        ensure(got == prefix[i as usize - 1], || format!("position {i}"))?;
    }
    let took = within(Duration::from_secs(5), start)?;
    Ok(format!("prefix law n <= 16, index formula 1..100000, {took:.2?}"))
}

fn c7_paperfold() -> Outcome {
    let start = Instant::now();
    for n in 0..=12u32 {
        let paper = creases(n).map_err(|e| e.to_string())?;
        ensure(paper == dragon_fold(&classic_instructions(n as usize)), || format!("order {n}"))?;
    }
    let took = within(Duration::from_secs(5), start)?;
    Ok(format!("creases match for n <= 12, {took:.2?}"))
}

fn c8_geometry() -> Outcome {
    let start = Instant::now();
    let base = Complex::new(1i64, 1);
    for n in 0..=20 {
        let e = endpoint(&classic_path(&classic_instructions(n))).map_err(|e| e.to_string())?;
        let g = base.powu(n as u32);
        ensure(e == Point::new(g.re, g.im), || format!("order {n}: {e:?} vs {g}"))?;
    }
    for n in 0..=12 {
        ensure(distinct_undirected_edges(&classic_path(&classic_instructions(n))), || {
            format!("order {n} repeats an edge")
        })?;
    }
    for fig in [FIGURE_5A, FIGURE_5B] {
        let rs: Instructions = fig.parse().unwrap();
        ensure(distinct_undirected_edges(&classic_path(&rs)), || format!("{fig} repeats an edge"))?;
    }
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!("endpoints = (1+i)^n for n <= 20; edges distinct; {took:.2?}"))
}

fn c9_rendering() -> Outcome {
    let opts = RenderOptions::default();
    let svg = path_to_svg(&classic_path(&classic_instructions(8)), &opts).map_err(|e| e.to_string())?;
    let points = svg
        .split("points=\"")
        .nth(1)
        .and_then(|s| s.split('"').next())
        .map(|s| s.split(' ').count())
        .unwrap_or(0);
    // 2^8 segments need 2^8 + 1 vertices.
    let want = (1usize << 8) + 1;
    ensure(points == want, || format!("order 8 polyline has {points} points, want {want}"))?;
    let mut checked = vec!["order8.svg"];
    ensure(svg.as_bytes() == std::fs::read(fixture("order8.svg")).unwrap(), || "order8.svg differs".into())?;
    for (fig, file) in [(FIGURE_5A, "fig5a.svg"), (FIGURE_5B, "fig5b.svg")] {
        let rs: Instructions = fig.parse().unwrap();
        let svg = path_to_svg(&classic_path(&rs), &opts).map_err(|e| e.to_string())?;
        ensure(svg.as_bytes() == std::fs::read(fixture(file)).unwrap(), || format!("{file} differs"))?;
        checked.push(file);
    }
    Ok(format!("order 8 has {points} points; goldens match: {}", checked.join(", ")))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dragoncurve").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, out)
}

fn c10_cli_contract() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let k = rng.gen_range(0..=14);
        let rots: String = (0..k).map(|_| if rng.gen() { 'C' } else { 'a' }).collect();
        let u = run_cli(&["generate", "--method", "unfold", "--rots", &rots, "--format", "turns"]);
        let f = run_cli(&["generate", "--method", "fold", "--rots", &rots, "--format", "turns"]);
        ensure(u.0 == 0 && f.0 == 0, || format!("{rots}: exit {} / {}", u.0, f.0))?;
        ensure(u.1 == f.1, || format!("{rots}: unfold and fold outputs differ"))?;
    }

    let bin = env!("CARGO_BIN_EXE_dragoncurve");
    let status = |extra: &[&str]| -> Result<i32, String> {
        let mut args = vec!["verify", "--law", "all", "--max-len", "12", "--cases", "1000", "--seed", "42"];
        args.extend_from_slice(extra);
        let out = Command::new(bin).args(&args).output().map_err(|e| e.to_string())?;
        Ok(out.status.code().unwrap_or(-1))
    };
    let clean = status(&[])?;
    ensure(clean == 0, || format!("clean verify exited {clean}"))?;
    for m in Mutant::ALL {
        let code = status(&["--mutant", m.as_str()])?;
        ensure(code == 1, || format!("mutant {} exited {code}", m.as_str()))?;
    }
    Ok("100 random strings byte-identical; verify exit 0 clean, 1 for each of 3 mutants".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("C1  known curves", c1_known_curves),
        ("C2  exhaustive equivalence", c2_exhaustive_equivalence),
        ("C3  length law", c3_length_law),
        ("C4  law suite", c4_law_suite),
        ("C5  worked examples", c5_worked_examples),
        ("C6  stream laws", c6_stream_laws),
        ("C7  paper-fold oracle", c7_paperfold),
        ("C8  geometry", c8_geometry),
        ("C9  rendering", c9_rendering),
        ("C10 CLI contract", c10_cli_contract),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name:<28} {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name:<28} {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
