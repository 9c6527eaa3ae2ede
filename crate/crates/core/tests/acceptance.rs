//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use cyclodep::curvegeom::{
    check_assumption, cyclotomic_realizable, map_degree, phi_enumerate, phi_oracle, Assumption,
    Character, CurveData,
};
use cyclodep::exactcore::{nth_power_in_q, Poly, RatFunc, Rational};
use cyclodep::explorer::{
    analyze, parse_curve, scan_dependent, torsion_fiber_split, AnalysisConfig,
};
use cyclodep::intlattice::{content, min_content, rank, IntMatrix};
use cyclodep::multdep::{
    decompose, dependence_oracle, factor_rational, is_dependent, is_primitively_dependent,
    relation_lattice, PointQ,
};
use cyclodep::par::Execution;
use cyclodep::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ch(a: &[i64]) -> Character {
    Character::new(a.to_vec()).unwrap()
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)*));
        }
    };
}

/// Characters of `((t-1)^d, t)`: `+-(1,0)` with `m = d`, `+-(0,1)` with
/// `m = 1`, and `+-(1,-d)`, all with `c = 1`; equal to the exhaustive search
/// with bound `d + 1`.
fn power_curve_characters() -> Outcome {
    for d in 2..=6i64 {
        let curve = parse_curve(&format!("( t-1)^{d}; t")).map_err(|e| e.to_string())?;
        let phi = phi_enumerate(&curve, Execution::Parallel).map_err(|e| e.to_string())?;
        for (a, m) in [
            ([1, 0], d as u64),
            ([-1, 0], d as u64),
            ([0, 1], 1),
            ([0, -1], 1),
        ] {
            let nc = phi.iter().find(|nc| nc.character == ch(&a));
            let Some(nc) = nc else {
                return Err(format!("d={d}: {a:?} missing"));
            };
            ensure!(nc.m == m, "d={d}: {a:?} has m={} (want {m})", nc.m);
            ensure!(nc.c == r(1), "d={d}: {a:?} has c={}", nc.c);
            ensure!(nc.realizable_cyclotomic, "d={d}: {a:?} not realizable");
        }
        ensure!(
            phi.len() == 6,
            "d={d}: {} characters, expected 6",
            phi.len()
        );
        for a in [[1, -d], [-1, d]] {
            ensure!(
                phi.iter().any(|nc| nc.character == ch(&a)),
                "d={d}: {a:?} missing"
            );
        }
        let listed: Vec<Character> = phi.iter().map(|nc| nc.character.clone()).collect();
        let oracle =
            phi_oracle(&curve, d as u32 + 1, Execution::Parallel).map_err(|e| e.to_string())?;
        ensure!(
            listed == oracle,
            "d={d}: enumerate {listed:?} vs oracle {oracle:?}"
        );
    }
    Ok("d = 2..6: 6 characters each, +-(1,-d) confirmed by exhaustive search".into())
}

/// On `((t-1)^3, t)`, fibers of `(1,0)` divide `(t-1)^{3N} - 1` and the
/// factor degrees add up to `3N`.
fn power_curve_fibers() -> Outcome {
    let curve = parse_curve("(t-1)^3; t").unwrap();
    let u = Poly::from_i64(&[-1, 1]);
    let mut kept = 0;
    for n in 1..=6u64 {
        let split = torsion_fiber_split(&curve, &ch(&[1, 0]), n).map_err(|e| e.to_string())?;
        let target = &u.pow(3 * n as u32) - &Poly::one();
        for (f, _) in &split.kept {
            ensure!(
                f.divides(&target),
                "N={n}: {f} does not divide (t-1)^{} - 1",
                3 * n
            );
            // x2 - 1 = t - 1 is a cube root of x1 on these points
            ensure!(!f.divides(&u), "N={n}: kept factor {f} is a pole/zero");
        }
        ensure!(
            split.factor_degree_total() == 3 * n as usize,
            "N={n}: total degree {} != {}",
            split.factor_degree_total(),
            3 * n
        );
        kept += split.kept.len();
    }
    Ok(format!(
        "N = 1..6: {kept} kept factors, all divide (t-1)^(3N) - 1"
    ))
}

fn hypothesis_tightness() -> Outcome {
    let cases = [
        ("2; t", Some(ch(&[1, 0]))),
        ("t; 2*t", Some(ch(&[1, -1]))),
        ("(t-1)^3; t", None),
    ];
    for (text, want) in cases {
        let c = parse_curve(text).map_err(|e| e.to_string())?;
        let got = match check_assumption(&c) {
            Assumption::Ok => None,
            Assumption::Violation(a) => Some(a),
        };
        ensure!(got == want, "{text}: got {got:?}, want {want:?}");
    }
    Ok("violations (1,0) and (1,-1) reported; (t-1)^3, t accepted".into())
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    let deg = rng.gen_range(0..=4);
    Poly::from_i64(&(0..=deg).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>())
}

fn random_curve(rng: &mut ChaCha8Rng) -> Option<CurveData> {
    let mut coords = Vec::new();
    for _ in 0..2 {
        let (n, d) = (random_poly(rng), random_poly(rng));
        if n.is_zero() || d.is_zero() {
            return None;
        }
        coords.push(RatFunc::new(n, d).ok()?);
    }
    let c = CurveData::new(coords).ok()?;
    (map_degree(&c).ok()? == 1 && check_assumption(&c).is_ok()).then_some(c)
}

fn random_curves_match_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut curves = Vec::new();
    let mut attempts = 0;
    while curves.len() < 50 && attempts < 100_000 {
        attempts += 1;
        if let Some(c) = random_curve(&mut rng) {
            curves.push(c);
        }
    }
    ensure!(
        curves.len() == 50,
        "only {} proper curves generated",
        curves.len()
    );
    let mut rank_violations = 0;
    let mut mismatches = Vec::new();
    let mut total = 0;
    for c in &curves {
        match phi_enumerate(c, Execution::Parallel) {
            Ok(phi) => {
                total += phi.len();
                let listed: Vec<Character> = phi.into_iter().map(|nc| nc.character).collect();
                let oracle = phi_oracle(c, 6, Execution::Parallel).map_err(|e| e.to_string())?;
                if listed != oracle {
                    let coords: Vec<String> = c.coords().iter().map(ToString::to_string).collect();
                    mismatches.push(format!("{coords:?}: {listed:?} vs {oracle:?}"));
                }
            }
            Err(Error::InvariantViolation(msg)) => {
                rank_violations += 1;
                mismatches.push(msg);
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    ensure!(
        rank_violations == 0,
        "{rank_violations} invariant violations"
    );
    ensure!(
        mismatches.is_empty(),
        "{} mismatches, first: {}",
        mismatches.len(),
        mismatches[0]
    );
    Ok(format!(
        "50 curves ({attempts} drawn), {total} characters, all equal to exhaustive search"
    ))
}

const PRIMES: [i64; 6] = [2, 3, 5, 7, 11, 13];

fn prime_power_product(exps: &[i32]) -> Rational {
    exps.iter()
        .zip(PRIMES)
        .fold(Rational::one(), |acc, (e, p)| acc * r(p).pow(*e))
}

/// Random 2-dimensional points; half are built from proportional exponent
/// vectors so that they are dependent.
fn random_point(rng: &mut ChaCha8Rng) -> PointQ {
    let sign = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.3) { -1 } else { 1 };
    let coords: Vec<Rational> = if rng.gen_bool(0.5) {
        let base: Vec<i32> = (0..6).map(|_| rng.gen_range(-1..=1)).collect();
        (0..2)
            .map(|_| {
                let k = rng.gen_range(-3..=3);
                let e: Vec<i32> = base.iter().map(|b| b * k).collect();
                prime_power_product(&e) * r(sign(rng))
            })
            .collect()
    } else {
        (0..2)
            .map(|_| {
                let e: Vec<i32> = (0..6)
                    .map(|_| {
                        if rng.gen_bool(0.4) {
                            rng.gen_range(-3..=3)
                        } else {
                            0
                        }
                    })
                    .collect();
                prime_power_product(&e) * r(sign(rng))
            })
            .collect()
    };
    PointQ::new(coords).unwrap()
}

fn dependence_matches_oracle() -> Outcome {
    let fixed = [
        ((2, 8), Some(vec![3, -1]), true),
        ((4, 8), Some(vec![3, -2]), true),
        ((-1, 2), None, true),
        ((2, 3), None, false),
    ];
    for ((a, b), prim, dep) in fixed {
        let p = PointQ::from_i64(&[(a, 1), (b, 1)]).unwrap();
        ensure!(is_dependent(&p).unwrap() == dep, "({a},{b}): dependence");
        ensure!(
            is_primitively_dependent(&p).unwrap() == prim,
            "({a},{b}): primitive relation"
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut dependent = 0;
    for _ in 0..200 {
        let p = random_point(&mut rng);
        let lattice = relation_lattice(&p).map_err(|e| e.to_string())?;
        let hits = dependence_oracle(&p, 6, Execution::Parallel);
        for a in &hits {
            let v: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
            ensure!(
                lattice.contains(&v).unwrap(),
                "{p}: oracle hit {a:?} outside lattice"
            );
        }
        let brute = hits
            .iter()
            .map(|a| content(&a.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()))
            .min();
        let got = (!lattice.is_empty()).then(|| min_content(&lattice));
        ensure!(
            got == brute,
            "{p}: min content {got:?}, brute force {brute:?}"
        );
        dependent += usize::from(got.is_some());
    }
    Ok(format!(
        "4 fixed cases; 200 random points ({dependent} dependent) agree with B = 6 search"
    ))
}

fn decomposition_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut max_rank = 0;
    for i in 0..200 {
        let p = if i % 2 == 0 {
            random_point(&mut rng)
        } else {
            let extra = random_point(&mut rng);
            let mut c = random_point(&mut rng).coords().to_vec();
            c.push(extra.coords()[0].clone());
            PointQ::new(c).unwrap()
        };
        let d = decompose(&p).map_err(|e| e.to_string())?;
        ensure!(d.reconstruct() == p.coords(), "{p}: reconstruction failed");
        let gen_rows: Vec<Vec<i64>> = d
            .generators
            .iter()
            .map(|g| {
                let f = factor_rational(g).unwrap();
                PRIMES
                    .iter()
                    .map(|&q| f.valuation(&(q as u64).into()))
                    .collect()
            })
            .collect();
        if !gen_rows.is_empty() {
            let m = IntMatrix::from_rows(PRIMES.len(), &gen_rows).unwrap();
            ensure!(rank(&m) == d.rank(), "{p}: generators not independent");
        }
        ensure!(
            d.generators.iter().all(|g| g.is_positive() && !g.is_one()),
            "{p}: bad generator"
        );
        if is_dependent(&p).unwrap() {
            ensure!(
                d.rank() < p.dim(),
                "{p}: dependent but rank {} = n",
                d.rank()
            );
        }
        max_rank = max_rank.max(d.rank());
    }
    Ok(format!(
        "200 points reconstruct exactly; generator ranks up to {max_rank}"
    ))
}

fn realizability() -> Outcome {
    ensure!(cyclotomic_realizable(&r(2), 2).unwrap(), "(2,2)");
    ensure!(!cyclotomic_realizable(&r(2), 3).unwrap(), "(2,3)");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let c = Rational::new(
            rng.gen_range(-500..=500i64).into(),
            rng.gen_range(1..=500i64).into(),
        );
        if c != r(0) {
            ensure!(cyclotomic_realizable(&c, 1).unwrap(), "({c},1)");
        }
    }
    let mut agree = 0;
    let mut positives = 0;
    while agree < 100 {
        let base = Rational::new(
            rng.gen_range(1..=12i64).into(),
            rng.gen_range(1..=12i64).into(),
        );
        let c = if rng.gen_bool(0.5) {
            base.pow(rng.gen_range(1..=6))
        } else {
            base
        };
        let c = if rng.gen_bool(0.5) { -c } else { c };
        let m = rng.gen_range(1..=8u64);
        let want = nth_power_in_q(&(&c * &c), m as u32).unwrap().is_some();
        let got = cyclotomic_realizable(&c, m).unwrap();
        ensure!(got == want, "({c},{m}): {got} vs definition {want}");
        agree += 1;
        positives += usize::from(want);
    }
    Ok(format!(
        "fixed cases and 100 random (c, m) match the definition ({positives} realizable)"
    ))
}

/// Largest dependent-point height on `((t-1)^2, t)`: the point `(1/4, 1/2)`
/// at `t = 1/2`, height `3 log 2`.
const HEIGHT_SNAPSHOT: f64 = 2.0794415416798357;

fn bounded_height() -> Outcome {
    let curve = parse_curve("(t-1)^2; t").unwrap();
    let mut maxima = Vec::new();
    for h in [10, 25, 50] {
        let cfg = AnalysisConfig {
            scan_height: h,
            ..AnalysisConfig::default()
        };
        let recs = scan_dependent(&curve, &cfg).map_err(|e| e.to_string())?;
        maxima.push(recs.iter().map(|r| r.height).fold(0.0, f64::max));
    }
    ensure!(
        maxima.windows(2).all(|w| w[1] <= w[0]),
        "maxima {maxima:?} increase"
    );
    for m in &maxima {
        ensure!(
            (m - HEIGHT_SNAPSHOT).abs() < 1e-12,
            "maximum {m} differs from snapshot"
        );
    }
    Ok(format!("max height {:.12} for H = 10, 25, 50", maxima[0]))
}

fn determinism() -> Outcome {
    let cfg = AnalysisConfig::default();
    let a = analyze("(t-1)^2; t", &cfg)
        .map_err(|e| e.to_string())?
        .to_json();
    let b = analyze("(t-1)^2; t", &cfg)
        .map_err(|e| e.to_string())?
        .to_json();
    let seq = AnalysisConfig {
        execution: Execution::Sequential,
        ..cfg
    };
    let c = analyze("(t-1)^2; t", &seq)
        .map_err(|e| e.to_string())?
        .to_json();
    ensure!(a == b, "two runs differ");
    ensure!(a == c, "sequential run differs from parallel run");
    Ok(format!("{} identical bytes across three runs", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("power-curve characters", power_curve_characters),
        ("power-curve torsion fibers", power_curve_fibers),
        ("hypothesis tightness", hypothesis_tightness),
        (
            "random proper curves vs exhaustive search",
            random_curves_match_oracle,
        ),
        (
            "dependence engine vs exhaustive search",
            dependence_matches_oracle,
        ),
        ("decomposition identity", decomposition_identity),
        ("realizability criterion", realizability),
        ("bounded dependent height", bounded_height),
        ("report determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}) [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
