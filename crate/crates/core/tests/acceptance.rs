//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`. Set `COMPDET_UPDATE_GOLDEN=1`
//! to rewrite the CLI golden files instead of comparing against them.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use compdet::closedform::{rhs_mina, rhs_t1, rhs_t2, rhs_t3, superfactorial, StirlingTable};
use compdet::detmat::{
    binomial_transform, build_matrix_mina, build_matrix_t1, build_matrix_t2, build_matrix_t3, det_bareiss,
    det_division_free, det_leibniz, triangularization_check, RingMatrix,
};
use compdet::random;
use compdet::ring::{MultiPoly, Rational, Scalar};
use compdet::series::{BiSeries, UniSeries};

type Outcome = Result<String, String>;

const TRIALS: u64 = 50;
const T1_BUDGET: Duration = Duration::from_secs(10);
const T3_BUDGET: Duration = Duration::from_secs(60);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn triangular_ok(c: &RingMatrix<Rational>, det: &Rational) -> Result<(), String> {
    let n = c.dim() - 1;
    let t = triangularization_check(&binomial_transform(n), c).map_err(|e| e.to_string())?;
    ensure(t.is_upper, || format!("b*c not upper triangular at n = {n}"))?;
    ensure(&t.diag_product == det, || format!("diag product {} != det {det} at n = {n}", t.diag_product))
}

/// Every matrix checked by criteria 1-3, kept for criterion 5.
#[derive(Default)]
struct Collected {
    matrices: Vec<(RingMatrix<Rational>, Rational)>,
}

fn criterion_1(collected: &mut Collected) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for seed in 0..TRIALS {
        let f = random::power_series(&mut random::rng(1000 + seed), 8);
        let a1 = f.coeff(1).unwrap().clone();
        for n in 0..=8 {
            let c = build_matrix_t1(&f, n).map_err(|e| e.to_string())?;
            let det = det_bareiss(&c).map_err(|e| e.to_string())?;
            let rhs = rhs_t1(&a1, n);
            ensure(det == rhs, || format!("seed {seed}, n = {n}: det {det} != {rhs}"))?;
            collected.matrices.push((c, det));
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < T1_BUDGET, || format!("took {elapsed:?}, budget {T1_BUDGET:?}"))?;
    Ok(format!("{checked} cases in {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_2(collected: &mut Collected) -> Outcome {
    let mut checked = 0;
    for seed in 0..TRIALS {
        let f = random::iteration_series(&mut random::rng(2000 + seed), 9);
        let b1 = f.coeff(2).unwrap().clone();
        for n in 0..=8 {
            let c = build_matrix_t2(&f, n).map_err(|e| e.to_string())?;
            let det = det_bareiss(&c).map_err(|e| e.to_string())?;
            let rhs = rhs_t2(&b1, n);
            ensure(det == rhs, || format!("seed {seed}, n = {n}: det {det} != {rhs}"))?;
            collected.matrices.push((c, det));
            checked += 1;
        }
    }
    // x/(1-x): iterates x/(1-ix), so c[i][j] = i^j and det = 1!...n!
    let geo = UniSeries::<Rational>::from_i64s(&[0, 1, 1, 1, 1, 1, 1, 1], 7);
    for n in 0..=6 {
        let c = build_matrix_t2(&geo, n).map_err(|e| e.to_string())?;
        let powers = RingMatrix::from_fn(n + 1, |i, j| Rational::from((i as i64).pow(j as u32))).unwrap();
        ensure(c == powers, || format!("x/(1-x) matrix is not (i^j) at n = {n}"))?;
        let det = det_bareiss(&c).map_err(|e| e.to_string())?;
        let sf = Rational::from(superfactorial(n));
        ensure(det == sf, || format!("x/(1-x) det {det} != superfactorial {sf} at n = {n}"))?;
        checked += 1;
    }
    Ok(format!("{checked} cases"))
}

fn criterion_3(collected: &mut Collected) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for seed in 0..TRIALS {
        let f = random::bivariate_series(&mut random::rng(3000 + seed), 7);
        let (b20, b11) = (f.coeff(2, 0).unwrap(), f.coeff(1, 1).unwrap());
        for n in 0..=6 {
            let c = build_matrix_t3(&f, n).map_err(|e| e.to_string())?;
            let det = det_bareiss(&c).map_err(|e| e.to_string())?;
            let rhs = rhs_t3(&b20, &b11, n);
            ensure(det == rhs, || format!("seed {seed}, n = {n}: det {det} != {rhs}"))?;
            collected.matrices.push((c, det));
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < T3_BUDGET, || format!("took {elapsed:?}, budget {T3_BUDGET:?}"))?;
    Ok(format!("{checked} cases in {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_4() -> Outcome {
    let f = random::symbolic_bivariate_series(4);
    let (b20, b11) = (MultiPoly::var(2, 0), MultiPoly::var(1, 1));
    let mut sizes = Vec::new();
    for n in 0..=3 {
        let c = build_matrix_t3(&f, n).map_err(|e| e.to_string())?;
        let det = det_division_free(&c);
        let rhs = rhs_t3(&b20, &b11, n);
        ensure(det == rhs, || format!("n = {n}: det {det} != {rhs}"))?;
        let vars = det.variables();
        ensure(vars.iter().all(|v| (v.m, v.n) == (2, 0) || (v.m, v.n) == (1, 1)), || {
            format!("n = {n}: determinant involves {vars:?}")
        })?;
        let entry_vars: usize = c.rows().flatten().map(|p| p.variables().len()).max().unwrap_or(0);
        sizes.push(format!("n={n}: {} terms from entries in {entry_vars} vars", det.num_terms()));
    }
    Ok(sizes.join(", "))
}

fn criterion_5(collected: &Collected) -> Outcome {
    for (c, det) in &collected.matrices {
        triangular_ok(c, det)?;
    }
    Ok(format!("{} matrices", collected.matrices.len()))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for n in 0..=6 {
        for seed in 0..5 {
            let mut rng = random::rng(6000 + 10 * n as u64 + seed);
            let g = random::power_series(&mut rng, n);
            let lifted = build_matrix_t3(&BiSeries::t_times(&g), n).map_err(|e| e.to_string())?;
            ensure(lifted == build_matrix_t1(&g, n).unwrap(), || format!("t*g(x) shape differs at n = {n}"))?;

            let h = random::iteration_series(&mut rng, n + 1);
            let lifted = build_matrix_t3(&BiSeries::from_univariate(&h).unwrap(), n).map_err(|e| e.to_string())?;
            ensure(lifted == build_matrix_t2(&h, n).unwrap(), || format!("x-free shape differs at n = {n}"))?;

            let v = random::nonzero_rational(&mut rng);
            let zero = Rational::zero();
            ensure(rhs_t3(&zero, &v, n) == rhs_t1(&v, n), || format!("b20 = 0 specialization at n = {n}"))?;
            ensure(rhs_t3(&v, &zero, n) == rhs_t2(&v, n), || format!("b11 = 0 specialization at n = {n}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} cases"))
}

fn criterion_7() -> Outcome {
    let mut rng = random::rng(7000);
    for k in 0..200 {
        let m = random::matrix(&mut rng, 1 + k % 5);
        let b = det_bareiss(&m).map_err(|e| e.to_string())?;
        let d = det_division_free(&m);
        let l = det_leibniz(&m).map_err(|e| e.to_string())?;
        ensure(b == d && d == l, || format!("matrix {k}: bareiss {b}, division-free {d}, leibniz {l}"))?;
    }
    Ok("200 matrices".into())
}

fn criterion_8() -> Outcome {
    const ORDER: usize = 12;
    for seed in 0..10 {
        let f = random::derivative_series(&mut random::rng(8000 + seed), ORDER);
        for n in 0..=3 {
            let det = det_division_free(&build_matrix_mina(&f, n).map_err(|e| e.to_string())?);
            let rhs = rhs_mina(&f, n).map_err(|e| e.to_string())?;
            ensure(det.order() == ORDER - n && rhs.order() == ORDER - n, || format!("window mismatch at n = {n}"))?;
            for j in 0..=ORDER - n {
                let (a, b) = (det.coeff(j).unwrap(), rhs.coeff(j).unwrap());
                ensure(a == b, || format!("seed {seed}, n = {n}, [x^{j}]: {a} != {b}"))?;
            }
        }
    }
    Ok("10 series, n = 0..3".into())
}

/// Counts set partitions by explicit enumeration of restricted growth
/// strings.
fn count_partitions(k: usize, m: usize) -> u64 {
    let mut count = 0;
    let mut rgs = vec![0usize; k];
    loop {
        let blocks = if k == 0 { 0 } else { rgs.iter().max().unwrap() + 1 };
        if blocks == m {
            count += 1;
        }
        // next restricted growth string in lexicographic order
        let mut pos = k;
        loop {
            if pos <= 1 {
                return count;
            }
            pos -= 1;
            let prefix_max = rgs[..pos].iter().max().copied().unwrap_or(0);
            if rgs[pos] <= prefix_max {
                rgs[pos] += 1;
                for x in rgs.iter_mut().skip(pos + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

fn criterion_9() -> Outcome {
    let table = StirlingTable::new(8);
    for k in 0..=8 {
        for m in 0..=k {
            let expected = BigInt::from(count_partitions(k, m));
            ensure(table.get(k, m) == expected, || format!("S({k},{m}) = {} != {expected}", table.get(k, m)))?;
        }
    }
    ensure(superfactorial(5) == BigInt::from(34560), || format!("superfactorial(5) = {}", superfactorial(5)))?;
    Ok("S(k,m) for k <= 8, superfactorial(5) = 34560".into())
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out =
        Command::new(env!("CARGO_BIN_EXE_compdet")).args(args).current_dir(golden_dir()).output().expect("run compdet");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn strip_elapsed(text: &str) -> String {
    text.lines().filter(|l| !l.starts_with("elapsed:")).map(|l| format!("{l}\n")).collect()
}

fn criterion_10() -> Outcome {
    let update = std::env::var_os("COMPDET_UPDATE_GOLDEN").is_some();
    let invocations: [(&str, &[&str]); 2] = [
        ("verify_t2_vandermonde.txt", &["verify", "--theorem", "2", "--input", "vandermonde.json", "--n-max", "4"]),
        ("verify_t3_seed42.txt", &["verify", "--theorem", "3", "--seed", "42", "--n-max", "5", "--trials", "20"]),
    ];
    for (golden, args) in invocations {
        let (code, first) = run_cli(args);
        ensure(code == 0, || format!("{golden}: exit code {code}"))?;
        let (_, second) = run_cli(args);
        ensure(strip_elapsed(&first) == strip_elapsed(&second), || format!("{golden}: two runs differ"))?;
        let path = golden_dir().join(golden);
        if update {
            std::fs::write(&path, strip_elapsed(&first)).map_err(|e| e.to_string())?;
        }
        let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure(strip_elapsed(&first) == expected, || format!("{golden}: output differs from golden file"))?;
    }
    let (code, _) = run_cli(&["verify", "--theorem", "1", "--n-max", "0"]);
    ensure(code == 0, || format!("n-max 0 exit code {code}"))?;
    let (code, _) = run_cli(&["verify", "--theorem", "3", "--input", "vandermonde.json"]);
    ensure(code == 2, || format!("wrong input kind exit code {code}"))?;
    let (code, _) = run_cli(&["verify", "--theorem", "2", "--input", "missing.json"]);
    ensure(code == 2, || format!("missing input exit code {code}"))?;
    let (code, _) = run_cli(&["verify", "--theorem", "7"]);
    ensure(code == 2, || format!("bad theorem exit code {code}"))?;
    let (code, _) = run_cli(&["selfcheck", "--inject-fault", "stirling"]);
    ensure(code == 1, || format!("faulted selfcheck exit code {code}"))?;
    Ok("2 golden invocations, exit codes 0/1/2".into())
}

fn main() {
    let mut collected = Collected::default();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 powers identity", criterion_1(&mut collected)),
        ("2 iterates identity", criterion_2(&mut collected)),
        ("3 bivariate identity (numeric)", criterion_3(&mut collected)),
        ("4 bivariate identity (symbolic)", criterion_4()),
        ("5 binomial triangularization", criterion_5(&collected)),
        ("6 specializations", criterion_6()),
        ("7 determinant oracle equivalence", criterion_7()),
        ("8 derivative identity over series", criterion_8()),
        ("9 combinatorics", criterion_9()),
        ("10 CLI contract", criterion_10()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
