//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p bkfq-cli --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use bkfq_core::{
    audit, binet_qf_float, discrepancy, fib_pair_fastdouble, qf, verify, Bicomplex, Conjugation,
    GridShape, IdentityId, KContext, ParamGrid, Params, Poly, Scalar, ScalarMode,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || {
        format!("{what} took {took:?}, limit {limit:?}")
    })
}

fn c1_sequence_conformance() -> Outcome {
    let one = KContext::int(1).unwrap();
    let want = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55];
    for (n, w) in want.iter().enumerate() {
        ensure(one.fib(n as i64) == Scalar::Int(BigInt::from(*w)), || {
            format!("F(1,{n}) != {w}")
        })?;
    }
    let sym = KContext::symbolic();
    let listing: [&[i64]; 6] = [
        &[],
        &[1],
        &[0, 1],
        &[1, 0, 1],
        &[0, 2, 0, 1],
        &[1, 0, 3, 0, 1],
    ];
    for (n, c) in listing.iter().enumerate() {
        ensure(sym.fib(n as i64) == Scalar::Sym(Poly::from_i64s(c)), || {
            format!("symbolic F(k,{n}) = {}", sym.fib(n as i64))
        })?;
    }
    Ok("11 classical terms and 6 symbolic terms exact".into())
}

fn c2_table_conformance() -> Outcome {
    let table: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (1, 3), (-1, 0), (-1, 1)],
        [(1, 3), (-1, 2), (-1, 1), (1, 0)],
    ];
    for mode in [ScalarMode::Int, ScalarMode::Sym] {
        for (r, row) in table.iter().enumerate() {
            for (c, &(sign, idx)) in row.iter().enumerate() {
                let got = Bicomplex::basis(mode, r) * Bicomplex::basis(mode, c);
                let want = Bicomplex::basis(mode, idx).scale_int(sign);
                ensure(got == want, || format!("e{r}*e{c} = {got}"))?;
            }
        }
    }
    let ij = Bicomplex::unit_ij(ScalarMode::Int);
    ensure(&ij * &ij == Bicomplex::one(ScalarMode::Int), || {
        "(ij)^2 != 1".into()
    })?;
    Ok("16 basis products match, (ij)^2 = 1".into())
}

fn c3_symbolic_suite() -> Outcome {
    let ctx = KContext::symbolic();
    let cases: Vec<(IdentityId, ParamGrid)> = vec![
        (IdentityId::Recurrence, ParamGrid::n(-10..=30)),
        (IdentityId::ConjIProd, ParamGrid::n(0..=25)),
        (IdentityId::ConjIjProd, ParamGrid::n(0..=25)),
        (IdentityId::LucasSum, ParamGrid::n(2..=25)),
        (IdentityId::LucasSum, ParamGrid::n(-10..=25)),
        (IdentityId::LucasDiff, ParamGrid::n(2..=25)),
        (IdentityId::LucasDiff, ParamGrid::n(-10..=25)),
        (IdentityId::Honsberger, ParamGrid::n(0..=12).with_m(0..=12)),
        (
            IdentityId::Docagne,
            ParamGrid::n(0..=15)
                .with_m(0..=15)
                .with_shape(GridShape::MAtMostN),
        ),
        (IdentityId::SumAll, ParamGrid::n(1..=25)),
        (IdentityId::SumOdd, ParamGrid::n(1..=25)),
        (IdentityId::SumEven, ParamGrid::n(1..=25)),
        (IdentityId::Cassini, ParamGrid::n(1..=30)),
        (IdentityId::Catalan, ParamGrid::n(1..=20).with_r(0..=5)),
    ];
    let mut total = 0;
    for (id, grid) in cases {
        let start = Instant::now();
        let r = verify(id, &ctx, &grid).map_err(|e| e.to_string())?;
        within(Duration::from_secs(5), start, id.name())?;
        ensure(r.checked > 0 && r.passed == r.checked, || {
            format!("{id} on {grid}: {}/{} passed", r.passed, r.checked)
        })?;
        total += r.checked;
    }
    // sum identities against an explicit component-wise brute-force sum
    let k = ctx.k().clone();
    for n in 1..=25i64 {
        let f = |i: i64| ctx.fib(i);
        for c in 0..4i64 {
            let all = (1..=n).fold(ctx.constant(0), |acc, s| acc + f(s + c));
            let want = f(n + 1 + c) + f(n + c) - f(1 + c) - f(c);
            ensure(&k * &all == want, || {
                format!("SUM_ALL brute force n={n} c={c}")
            })?;
            let odd = (1..=n).fold(ctx.constant(0), |acc, s| acc + f(2 * s - 1 + c));
            ensure(&k * &odd == f(2 * n + c) - f(c), || {
                format!("SUM_ODD brute force n={n}")
            })?;
            let even = (1..=n).fold(ctx.constant(0), |acc, s| acc + f(2 * s + c));
            ensure(&k * &even == f(2 * n + 1 + c) - f(1 + c), || {
                format!("SUM_EVEN brute force n={n}")
            })?;
        }
    }
    Ok(format!("14 grids, {total} symbolic points, all passed"))
}

fn c4_known_typo() -> Outcome {
    let ctx = KContext::symbolic();
    let grid = ParamGrid::n(0..=5).with_m(0..=5);
    let r = verify(IdentityId::Sec2Mul, &ctx, &grid).map_err(|e| e.to_string())?;
    ensure(r.passed == 0 && r.checked == 36, || {
        format!("expected 0/36, got {}/{}", r.passed, r.checked)
    })?;
    for p in grid.points() {
        let d = discrepancy(IdentityId::Sec2Mul, &ctx, &p).map_err(|e| e.to_string())?;
        let m = p.m.unwrap();
        let want = (ctx.fib(p.n + 3) * ctx.fib(m + 3)).scale(2);
        ensure(d == Bicomplex::from_scalar(want), || {
            format!("discrepancy at {p}: {d}")
        })?;
    }
    Ok("36/36 points fail with discrepancy (2 F(n+3) F(m+3), 0, 0, 0)".into())
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_bkfq"))
        .args(args)
        .output()
        .expect("spawn bkfq");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn c5_audit_completeness() -> Outcome {
    let (code_a, out_a) = run_cli(&["audit", "--format", "json"]);
    let (code_b, out_b) = run_cli(&["audit", "--format", "json"]);
    ensure(out_a == out_b && code_a == code_b, || {
        "audit output not deterministic".into()
    })?;
    let doc: Value = serde_json::from_slice(&out_a).map_err(|e| e.to_string())?;
    let reports = doc["reports"].as_array().ok_or("no reports array")?;
    ensure(reports.len() == IdentityId::ALL.len(), || {
        format!("{} reports", reports.len())
    })?;
    let ctx = KContext::symbolic();
    let lib = audit(&ctx);
    let mut failing = Vec::new();
    for (report, id) in reports.iter().zip(IdentityId::ALL) {
        ensure(report["id"] == id.name(), || {
            format!("order: {} vs {id}", report["id"])
        })?;
        let verdict = report["verdict"].as_str().ok_or("missing verdict")?;
        ensure(verdict == "pass" || verdict == "fail", || {
            format!("{id}: verdict {verdict}")
        })?;
        if verdict == "fail" {
            failing.push(id.name());
            let lib_fail = lib
                .iter()
                .find(|r| r.id == id)
                .and_then(|r| r.first_failure.as_ref())
                .ok_or("library report lacks failure")?;
            let d = &report["first_failure"]["discrepancy"];
            let want = lib_fail.discrepancy.components().map(|c| c.to_string());
            for (key, w) in ["1", "i", "j", "ij"].iter().zip(want) {
                ensure(d[key] == w.as_str(), || format!("{id}: discrepancy[{key}]"))?;
            }
        }
    }
    ensure(code_a == 1 && !failing.is_empty(), || {
        format!("exit code {code_a}")
    })?;
    Ok(format!("19 verdicts, failing: {}", failing.join(", ")))
}

fn c6_binet() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for k in 1..=3i64 {
        let ctx = KContext::int(k).unwrap();
        for n in 0..=25u32 {
            let exact = qf(&ctx, n as i64);
            let approx = binet_qf_float(k as f64, n);
            for (c, got) in exact.value().components().iter().zip(approx) {
                let want: f64 = c.to_string().parse().unwrap();
                let err = if want == 0.0 {
                    got.abs()
                } else {
                    ((got - want) / want).abs()
                };
                worst = worst.max(err);
                ensure(err <= 1e-9, || format!("k={k} n={n}: {got} vs {want}"))?;
            }
        }
    }
    within(Duration::from_secs(1), start, "binet check")?;
    Ok(format!("max relative error {worst:.2e}"))
}

fn c7_fast_doubling() -> Outcome {
    let start = Instant::now();
    let mut ns: Vec<u64> = (0..=1000).collect();
    for t in 0..=13u32 {
        let p = 1u64 << t;
        ns.extend([p - 1, p, p + 1]);
    }
    ns.sort_unstable();
    ns.dedup();
    for k in 1..=5i64 {
        let ctx = KContext::int(k).unwrap();
        let kb = BigInt::from(k);
        for &n in &ns {
            let (a, b) = fib_pair_fastdouble(&kb, n);
            ensure(Scalar::Int(a) == ctx.fib(n as i64), || {
                format!("k={k} n={n}")
            })?;
            ensure(Scalar::Int(b) == ctx.fib(n as i64 + 1), || {
                format!("k={k} n={n}+1")
            })?;
        }
    }
    // independent iterative oracle
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for _ in 0..1000 {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    let digits = a.to_string().len();
    ensure(digits == 209, || format!("F(1,1000) has {digits} digits"))?;
    let (fast, _) = fib_pair_fastdouble(&BigInt::from(1), 1000);
    ensure(fast == a, || "fast doubling F(1,1000) differs".into())?;
    within(Duration::from_secs(5), start, "fast doubling")?;
    Ok(format!(
        "{} indices x 5 k values; F(1,1000) has 209 digits",
        ns.len()
    ))
}

fn c8_conjugation_algebra() -> Outcome {
    let arb = prop::array::uniform4(-10_000i64..10_000)
        .prop_map(|c| Bicomplex::from_ints(ScalarMode::Int, c));
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(arb.clone(), arb), |(a, b)| {
            for kind in Conjugation::ALL {
                prop_assert_eq!(a.conj(kind).conj(kind), a.clone());
                prop_assert_eq!((&a * &b).conj(kind), a.conj(kind) * b.conj(kind));
                prop_assert_eq!((&a + &b).conj(kind), a.conj(kind) + b.conj(kind));
            }
            let ni = a.norm_form(Conjugation::I);
            prop_assert!(ni.x().is_zero() && ni.z().is_zero());
            let nj = a.norm_form(Conjugation::J);
            prop_assert!(nj.y().is_zero() && nj.z().is_zero());
            let nij = a.norm_form(Conjugation::IJ);
            prop_assert!(nij.x().is_zero() && nij.y().is_zero());
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    // same structure on the quaternion norm forms, symbolically
    let ctx = KContext::symbolic();
    for n in 0..=25 {
        let q = qf(&ctx, n);
        let ni = q.norm_form(Conjugation::I);
        let nj = q.norm_form(Conjugation::J);
        let nij = q.norm_form(Conjugation::IJ);
        ensure(ni.x().is_zero() && ni.z().is_zero(), || {
            format!("QF({n}) I norm")
        })?;
        ensure(nj.y().is_zero() && nj.z().is_zero(), || {
            format!("QF({n}) J norm")
        })?;
        ensure(nij.x().is_zero() && nij.y().is_zero(), || {
            format!("QF({n}) IJ norm")
        })?;
    }
    Ok("1000 random pairs x 3 conjugations; QF norm forms 0..25".into())
}

fn c9_cli_end_to_end() -> Outcome {
    let cases: [(&[&str], i32); 3] = [
        (
            &[
                "gen", "--k", "1", "--from", "0", "--to", "6", "--seq", "fib",
            ],
            0,
        ),
        (
            &[
                "verify", "--id", "cassini", "--k", "sym", "--n", "1..30", "--format", "json",
            ],
            0,
        ),
        (
            &[
                "verify", "--id", "sec2-mul", "--k", "sym", "--n", "0..3", "--m", "0..3",
            ],
            1,
        ),
    ];
    let mut outputs = Vec::new();
    for (args, want) in cases {
        let (code, out) = run_cli(args);
        let (code2, out2) = run_cli(args);
        ensure(code == want && code2 == want, || {
            format!("{args:?}: exit {code}")
        })?;
        ensure(out == out2, || {
            format!("{args:?}: output differs between runs")
        })?;
        outputs.push(String::from_utf8(out).map_err(|e| e.to_string())?);
    }
    let values: Vec<&str> = outputs[0]
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap_or(""))
        .collect();
    ensure(values == ["0", "1", "1", "2", "3", "5", "8"], || {
        format!("gen rows {values:?}")
    })?;
    let doc: Value = serde_json::from_str(&outputs[1]).map_err(|e| e.to_string())?;
    ensure(
        doc["passed"] == doc["checked"] && doc["checked"] == 30,
        || "cassini report".into(),
    )?;
    let ctx = KContext::symbolic();
    let f3 = ctx.fib(3);
    let want = Bicomplex::from_scalar((&f3 * &f3).scale(2));
    ensure(outputs[2].contains(&format!("discrepancy: {want}")), || {
        "sec2-mul discrepancy line".into()
    })?;
    let (code, _) = run_cli(&["frobnicate"]);
    ensure(code == 2, || format!("unknown subcommand exit {code}"))?;
    let params = Params::nm(0, 0);
    let d = discrepancy(IdentityId::Sec2Mul, &ctx, &params).map_err(|e| e.to_string())?;
    ensure(d == want, || "library/CLI discrepancy mismatch".into())?;
    Ok("exit codes 0/0/1, byte-identical reruns".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 sequence conformance", c1_sequence_conformance),
        ("2 multiplication table", c2_table_conformance),
        ("3 symbolic identity suite", c3_symbolic_suite),
        ("4 known-typo detection", c4_known_typo),
        ("5 audit completeness", c5_audit_completeness),
        ("6 Binet numeric check", c6_binet),
        ("7 fast-doubling equivalence", c7_fast_doubling),
        ("8 conjugation algebra", c8_conjugation_algebra),
        ("9 CLI end-to-end", c9_cli_end_to_end),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} ({took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} ({took:.2?})");
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
