//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bouquet::genuspoly::{bt_bouquet, bt_closed_form, partial_dual_euler_polynomial};
use bouquet::intersection::{signed_intersection_graph, SignedGraph};
use bouquet::ipoly::{direct_intersection_polynomial, intersection_polynomial};
use bouquet::poly::{GenusPolynomial, PolyKind};
use bouquet::rotation::{Bouquet, Sign};
use bouquet::surface::count_boundary_components;
use bouquet::toolkit::enumerate::random_bouquet;
use bouquet::toolkit::verify::{verify_with, Theorem, VerifyOptions};
use bouquet::Limits;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn euler(terms: &[(u32, u64)]) -> GenusPolynomial {
    GenusPolynomial::from_terms(PolyKind::Euler, terms.iter().copied())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took < budget, || format!("{what} took {took:?}, budget {budget:?}"))
}

fn c1_examples() -> Check {
    let cases = [
        ("(a,b,a,c,b,d,e,f,d,e,c,f)", "12z+44z^2+8z^3"),
        ("(a,b,a,c,d,e,c,f,e,d,b,f)", "2+18z+36z^2+8z^3"),
    ];
    for (word, expected) in cases {
        let started = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_bouquet"))
            .args(["poly", "--orientable", word])
            .output()
            .map_err(|e| e.to_string())?;
        within(started, Duration::from_secs(1), word)?;
        let got = String::from_utf8_lossy(&out.stdout).trim().to_string();
        ensure(out.status.success() && got == expected, || {
            format!("{word}: expected {expected}, got {got:?} ({})", out.status)
        })?;
    }
    Ok("both example words reproduced".into())
}

fn c2_closed_form() -> Check {
    let started = Instant::now();
    for t in 1..=8u32 {
        let direct = partial_dual_euler_polynomial(&bt_bouquet(t as usize)).map_err(|e| e.to_string())?;
        let closed = bt_closed_form(t).map_err(|e| e.to_string())?;
        ensure(direct == closed, || format!("t={t}: direct {direct}, closed form {closed}"))?;
    }
    within(started, Duration::from_secs(5), "t=1..8")?;
    Ok(format!("t=1..8 in {:?}", started.elapsed()))
}

fn c3_twisted_pair() -> Check {
    let a: Bouquet = "(1, 2, -1, 2)".parse().map_err(|e: bouquet::ParseError| e.to_string())?;
    let b: Bouquet = "(1, 2, -1, -2)".parse().map_err(|e: bouquet::ParseError| e.to_string())?;
    let (pa, pb) = (
        partial_dual_euler_polynomial(&a).map_err(|e| e.to_string())?,
        partial_dual_euler_polynomial(&b).map_err(|e| e.to_string())?,
    );
    let expected = euler(&[(1, 2), (2, 2)]);
    ensure(pa == expected && pb == expected, || format!("got {pa} and {pb}"))?;
    ensure(signed_intersection_graph(&a) != signed_intersection_graph(&b), || {
        "signed intersection graphs coincide".into()
    })?;
    Ok(format!("both {expected}, graphs differ"))
}

fn c4_star_path() -> Check {
    let limits = Limits::DEFAULT;
    for n in 1..=10usize {
        let star = SignedGraph::positive_star(n);
        let ip = intersection_polynomial(&star).map_err(|e| e.to_string())?;
        let expected = euler(&[(0, 2), (2, (1u64 << (n + 1)) - 2)]);
        ensure(ip == expected, || format!("S_{n}: {ip}, expected {expected}"))?;
        if n <= 5 {
            let direct = direct_intersection_polynomial(&star, &limits).map_err(|e| e.to_string())?;
            ensure(direct == ip, || format!("S_{n}: realization gives {direct}"))?;
        }
    }
    let p3 = intersection_polynomial(&SignedGraph::positive_path(3)).map_err(|e| e.to_string())?;
    ensure(p3 == euler(&[(0, 2), (2, 6)]), || format!("P_3: {p3}"))?;
    // P_0 = 1, P_1 = 2, P_n = P_{n-1} + 2z^2 P_{n-2}
    let mut prev = euler(&[(0, 1)]);
    let mut cur = euler(&[(0, 2)]);
    for n in 1..=10usize {
        let path = SignedGraph::positive_path(n);
        let ip = intersection_polynomial(&path).map_err(|e| e.to_string())?;
        ensure(ip == cur, || format!("P_{n}: {ip}, recurrence gives {cur}"))?;
        if n <= 7 {
            let direct = direct_intersection_polynomial(&path, &limits).map_err(|e| e.to_string())?;
            ensure(direct == ip, || format!("P_{n}: realization gives {direct}"))?;
        }
        let next = cur.try_add(&prev.scale_shift(2, 2)).map_err(|e| e.to_string())?;
        prev = cur;
        cur = next;
    }
    Ok("S_1..S_10, P_1..P_10".into())
}

fn c5_theorem_suite() -> Check {
    let started = Instant::now();
    let opts = VerifyOptions::default();
    let mut parts = Vec::new();
    for (theorem, n) in [
        (Theorem::Main1, 4),
        (Theorem::MutantEquiv, 4),
        (Theorem::ConstantTerm, 5),
        (Theorem::OneTerm, 5),
    ] {
        let report = verify_with(theorem, n, &opts).map_err(|e| e.to_string())?;
        ensure(report.passed(), || {
            format!("{theorem} n={n}: {} counterexamples, first {:?}", report.counterexamples.len(), report.counterexamples[0])
        })?;
        parts.push(format!("{theorem}({n}): {}", report.instances));
    }
    within(started, Duration::from_secs(600), "theorem suite")?;
    Ok(format!("{} in {:?}", parts.join(", "), started.elapsed()))
}

fn c6_join_law() -> Check {
    let opts = VerifyOptions {
        join_pairs: 200,
        ..VerifyOptions::default()
    };
    let report = verify_with(Theorem::JoinLaw, 10, &opts).map_err(|e| e.to_string())?;
    ensure(report.passed() && report.instances == 200, || {
        format!("{} instances, {} counterexamples", report.instances, report.counterexamples.len())
    })?;
    Ok("200 pairs, n1+n2 <= 10".into())
}

fn c7_anchors() -> Check {
    for (word, f) in [
        ("(e, e)", 2),
        ("(e, -e)", 1),
        ("(e, f, e, f)", 1),
        ("(e, e, f, f)", 3),
        ("(e, f, -e, f)", 1),
    ] {
        let b: Bouquet = word.parse().map_err(|e: bouquet::ParseError| e.to_string())?;
        let got = count_boundary_components(&b);
        ensure(got == f, || format!("f{word} = {got}, expected {f}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(0..=12);
        let b = random_bouquet(n, "e", &mut rng);
        let sum = partial_dual_euler_polynomial(&b).map_err(|e| e.to_string())?.coefficient_sum();
        ensure(sum == BigUint::from(1u32) << n, || format!("{b}: coefficient sum {sum}"))?;
    }
    Ok("five anchors, 1000 random sums".into())
}

fn c8_complete_graph() -> Check {
    let k5 = intersection_polynomial(&SignedGraph::positive_complete(5)).map_err(|e| e.to_string())?;
    let mut vertices: Vec<(String, Sign)> = (1..=4).map(|i| (format!("m{i}"), Sign::Minus)).collect();
    vertices.push(("p".into(), Sign::Plus));
    let isolated = SignedGraph::new(vertices, Vec::<(String, String)>::new()).map_err(|e| e.to_string())?;
    let other = intersection_polynomial(&isolated).map_err(|e| e.to_string())?;
    let expected = euler(&[(4, 32)]);
    ensure(k5 == expected && other == expected, || format!("K5 {k5}, 4K1- + K1+ {other}"))?;
    Ok(format!("both {expected}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("example reproduction", c1_examples),
        ("closed form for (1..t,1..t)", c2_closed_form),
        ("twisted pair with equal polynomials", c3_twisted_pair),
        ("star and path intersection polynomials", c4_star_path),
        ("exhaustive theorem suite", c5_theorem_suite),
        ("join multiplicativity", c6_join_law),
        ("surface anchors and coefficient sums", c7_anchors),
        ("positive K5", c8_complete_graph),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
