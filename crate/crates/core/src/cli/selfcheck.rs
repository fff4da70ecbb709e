//! Built-in invariant suites, run at fixed seeds.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;

use crate::closedform::{rhs_mina, rhs_t1, rhs_t2, rhs_t3_with, superfactorial, StirlingTable};
use crate::detmat::{
    binomial_transform, build_matrix_mina, build_matrix_t1, build_matrix_t2, build_matrix_t3, det_bareiss,
    det_division_free, det_leibniz, triangularization_check, RingMatrix,
};
use crate::random::{self, CaseRng};
use crate::ring::{Monomial, MultiPoly, Rational, Ring, Scalar, Var};
use crate::series::{BiSeries, UniSeries};

/// Faults the harness can inject to prove a suite notices them.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Overwrite S(6, 3) = 90 with 91
    Stirling,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Summary {
    pub suites: Vec<SuiteResult>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn total_cases(&self) -> usize {
        self.suites.iter().map(|s| s.cases).sum()
    }

    pub fn failed_suites(&self) -> Vec<&'static str> {
        self.suites.iter().filter(|s| !s.passed()).map(|s| s.name).collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {:<32} {:>5} cases", s.name, s.cases);
            for f in s.failures.iter().take(3) {
                let _ = writeln!(out, "     {f}");
            }
        }
        let _ = writeln!(out, "total cases: {}", self.total_cases());
        if self.passed() {
            let _ = writeln!(out, "selfcheck: all {} suites passed", self.suites.len());
        } else {
            let _ = writeln!(out, "selfcheck: FAILED {}", self.failed_suites().join(", "));
        }
        out
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult { name: self.name, cases: self.cases, failures: self.failures }
    }
}

/// Runs every suite. `fault` corrupts the Stirling table shared by the
/// combinatorial and bivariate suites.
pub fn run_all(fault: Option<Fault>) -> Summary {
    let mut table = StirlingTable::new(20);
    if fault == Some(Fault::Stirling) {
        table = table.with_cell(6, 3, BigInt::from(91));
    }
    let suites = vec![
        ring_axioms(),
        polynomial_evaluation(),
        composition_associativity(),
        truncation_consistency(),
        iteration_specializations(),
        iterate_semigroup(),
        derivative_leibniz(),
        determinant_oracles(),
        determinant_multiplicativity(),
        triangularization(),
        bivariate_matrix_specializations(),
        derivative_identity(),
        stirling_table(&table),
        closed_form_specializations(&table),
        bivariate_identity(&table),
    ];
    Summary { suites }
}

fn is_normalized(r: &Rational) -> bool {
    use num_integer::Integer;
    r.denom() > &BigInt::from(0)
        && (r.numer().gcd(r.denom()) == BigInt::from(1) || (r.is_zero() && r.denom() == &BigInt::from(1)))
}

fn ring_axioms() -> SuiteResult {
    let mut suite = Suite::new("rational-ring-axioms");
    let mut rng = random::rng(0x5eed_0001);
    for _ in 0..1000 {
        let (a, b, c) =
            (random::small_rational(&mut rng), random::small_rational(&mut rng), random::small_rational(&mut rng));
        let assoc = (&a + &b) + &c == &a + &(&b + &c);
        let distrib = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        let inverse = (&a + &(-&a)).is_zero();
        let normalized = [&a + &b, &a * &c, &b - &c].iter().all(is_normalized);
        suite.check(assoc && distrib && inverse && normalized, || format!("axioms fail at ({a}, {b}, {c})"));
    }
    suite.finish()
}

fn random_poly(rng: &mut CaseRng) -> MultiPoly {
    use rand::Rng;
    const VARS: [(u32, u32); 4] = [(1, 1), (2, 0), (2, 1), (3, 0)];
    let terms = (0..rng.gen_range(0..5)).map(|_| {
        let mono = Monomial::from_powers(VARS.iter().map(|&(m, n)| (Var::new(m, n), rng.gen_range(0..3))));
        (mono, random::small_rational(rng))
    });
    MultiPoly::from_terms(terms.collect::<Vec<_>>())
}

fn polynomial_evaluation() -> SuiteResult {
    let mut suite = Suite::new("polynomial-evaluation");
    let mut rng = random::rng(0x5eed_0002);
    for _ in 0..100 {
        let (p, q) = (random_poly(&mut rng), random_poly(&mut rng));
        let sigma: BTreeMap<Var, Rational> = [(1, 1), (2, 0), (2, 1), (3, 0)]
            .into_iter()
            .map(|(m, n)| (Var::new(m, n), random::small_rational(&mut rng)))
            .collect();
        let lhs = p.mul(&q).eval(&sigma).unwrap();
        let rhs = p.eval(&sigma).unwrap() * q.eval(&sigma).unwrap();
        suite.check(lhs == rhs, || format!("eval(p*q) != eval(p)*eval(q) for p = {p}, q = {q}"));
    }
    suite.finish()
}

fn zero_constant_series(rng: &mut CaseRng, order: usize) -> UniSeries<Rational> {
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend((1..=order).map(|_| random::small_rational(rng)));
    UniSeries::new(coeffs).unwrap()
}

fn composition_associativity() -> SuiteResult {
    let mut suite = Suite::new("composition-associativity");
    let mut rng = random::rng(0x5eed_0003);
    for _ in 0..50 {
        let f = zero_constant_series(&mut rng, 6);
        let g = zero_constant_series(&mut rng, 6);
        let h = zero_constant_series(&mut rng, 6);
        let left = f.compose(&g.compose(&h).unwrap()).unwrap();
        let right = f.compose(&g).unwrap().compose(&h).unwrap();
        suite.check(left == right, || format!("f(g(h)) != (f(g))(h) for f = {f}"));
    }
    suite.finish()
}

fn truncation_consistency() -> SuiteResult {
    let mut suite = Suite::new("truncation-consistency");
    let mut rng = random::rng(0x5eed_0004);
    for trial in 0..30 {
        let (hi, lo) = (8, 5);
        let f = random::power_series(&mut rng, hi);
        let g = zero_constant_series(&mut rng, hi);
        let bi = random::bivariate_series(&mut rng, hi);
        let (fl, gl) = (f.truncate(lo).unwrap(), g.truncate(lo).unwrap());
        let i = trial % 5;
        suite.check(f.pow(i as u64).truncate(lo).unwrap() == fl.pow(i as u64), || format!("pow truncation, i = {i}"));
        suite.check(f.compose(&g).unwrap().truncate(lo).unwrap() == fl.compose(&gl).unwrap(), || {
            "compose truncation".to_string()
        });
        suite.check(bi.iterate(i, hi).unwrap().truncate(lo).unwrap() == bi.iterate(i, lo).unwrap(), || {
            format!("iterate truncation, i = {i}")
        });
    }
    suite.finish()
}

fn times_x(s: &UniSeries<Rational>) -> UniSeries<Rational> {
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend(s.coeffs().iter().cloned());
    UniSeries::new(coeffs).unwrap()
}

fn iteration_specializations() -> SuiteResult {
    let mut suite = Suite::new("iteration-specializations");
    let mut rng = random::rng(0x5eed_0005);
    for _ in 0..10 {
        let g = random::power_series(&mut rng, 6);
        let f = BiSeries::t_times(&g);
        for i in 0..=8 {
            suite.check(f.iterate(i, 7).unwrap() == times_x(&g.pow(i as u64)), || {
                format!("t*g(x) iterate {i} != x*g^{i} for g = {g}")
            });
        }
        let h = random::iteration_series(&mut rng, 7);
        let f = BiSeries::from_univariate(&h).unwrap();
        let mut folded = UniSeries::x(7);
        for i in 0..=6 {
            suite.check(f.iterate(i, 7).unwrap() == folded, || format!("x-free iterate {i} != {i}-fold composition"));
            folded = h.compose(&folded).unwrap();
        }
    }
    suite.finish()
}

fn iterate_semigroup() -> SuiteResult {
    let mut suite = Suite::new("iterate-semigroup");
    let mut rng = random::rng(0x5eed_0006);
    for _ in 0..5 {
        let h = random::iteration_series(&mut rng, 6);
        let f = BiSeries::from_univariate(&h).unwrap();
        let iterates: Vec<_> = (0..=6).map(|i| f.iterate(i, 6).unwrap()).collect();
        for i in 0..=6 {
            for j in 0..=6 - i {
                let composed = iterates[i].compose(&iterates[j]).unwrap();
                suite.check(composed == iterates[i + j], || format!("f^({i}) o f^({j}) != f^({})", i + j));
            }
        }
    }
    suite.finish()
}

fn derivative_leibniz() -> SuiteResult {
    let mut suite = Suite::new("derivative-leibniz");
    let mut rng = random::rng(0x5eed_0007);
    for _ in 0..50 {
        let f = random::derivative_series(&mut rng, 7);
        let g = random::derivative_series(&mut rng, 7);
        let lhs = f.try_mul(&g).unwrap().derivative().unwrap();
        let (fd, gd) = (f.derivative().unwrap(), g.derivative().unwrap());
        let (ft, gt) = (f.truncate(6).unwrap(), g.truncate(6).unwrap());
        let rhs = fd.try_mul(&gt).unwrap().try_add(&ft.try_mul(&gd).unwrap()).unwrap();
        suite.check(lhs == rhs, || format!("(fg)' != f'g + fg' for f = {f}, g = {g}"));
    }
    suite.finish()
}

fn determinant_oracles() -> SuiteResult {
    let mut suite = Suite::new("determinant-oracle-equivalence");
    let mut rng = random::rng(0x5eed_0008);
    for k in 0..200 {
        let m = random::matrix(&mut rng, 1 + k % 5);
        let b = det_bareiss(&m).unwrap();
        let d = det_division_free(&m);
        let l = det_leibniz(&m).unwrap();
        suite.check(b == d && d == l, || format!("bareiss {b}, division-free {d}, leibniz {l}"));
    }
    suite.finish()
}

fn determinant_multiplicativity() -> SuiteResult {
    let mut suite = Suite::new("determinant-multiplicativity");
    let mut rng = random::rng(0x5eed_0009);
    for _ in 0..30 {
        let a = random::matrix(&mut rng, 4);
        let b = random::matrix(&mut rng, 4);
        let lhs = det_bareiss(&a.mul(&b).unwrap()).unwrap();
        let rhs = det_bareiss(&a).unwrap() * det_bareiss(&b).unwrap();
        suite.check(lhs == rhs, || format!("det(AB) = {lhs} != det(A)det(B) = {rhs}"));
    }
    suite.finish()
}

fn check_triangular(suite: &mut Suite, label: &str, c: &RingMatrix<Rational>) {
    let n = c.dim() - 1;
    let row0_ok = c.get(0, 0).is_one() && (1..=n).all(|j| c.get(0, j).is_zero());
    suite.check(row0_ok, || format!("{label}: row 0 is not (1, 0, ..., 0)"));
    let t = triangularization_check(&binomial_transform(n), c).unwrap();
    let det = det_bareiss(c).unwrap();
    suite.check(t.is_upper && t.diag_product == det, || {
        format!("{label}, n = {n}: upper {} diag {} det {det}", t.is_upper, t.diag_product)
    });
}

fn triangularization() -> SuiteResult {
    let mut suite = Suite::new("binomial-triangularization");
    let mut rng = random::rng(0x5eed_000a);
    for k in 0..20 {
        let n = k % 7;
        let f = random::power_series(&mut rng, n);
        check_triangular(&mut suite, "powers", &build_matrix_t1(&f, n).unwrap());
        let g = random::iteration_series(&mut rng, n + 1);
        check_triangular(&mut suite, "iterates", &build_matrix_t2(&g, n).unwrap());
        let h = random::bivariate_series(&mut rng, n + 1);
        check_triangular(&mut suite, "bivariate", &build_matrix_t3(&h, n).unwrap());
    }
    suite.finish()
}

fn bivariate_matrix_specializations() -> SuiteResult {
    let mut suite = Suite::new("bivariate-matrix-specializations");
    let mut rng = random::rng(0x5eed_000b);
    for n in 0..=6 {
        for _ in 0..3 {
            let g = random::power_series(&mut rng, n);
            let lifted = build_matrix_t3(&BiSeries::t_times(&g), n).unwrap();
            suite.check(lifted == build_matrix_t1(&g, n).unwrap(), || format!("t*g(x) matrix differs, n = {n}"));
            let h = random::iteration_series(&mut rng, n + 1);
            let lifted = build_matrix_t3(&BiSeries::from_univariate(&h).unwrap(), n).unwrap();
            suite.check(lifted == build_matrix_t2(&h, n).unwrap(), || format!("x-free matrix differs, n = {n}"));
        }
    }
    suite.finish()
}

fn derivative_identity() -> SuiteResult {
    let mut suite = Suite::new("derivative-matrix-identity");
    let mut rng = random::rng(0x5eed_000c);
    for _ in 0..10 {
        let f = random::derivative_series(&mut rng, 10);
        for n in 0..=3 {
            let det = det_division_free(&build_matrix_mina(&f, n).unwrap());
            let rhs = rhs_mina(&f, n).unwrap();
            suite.check(det == rhs, || format!("n = {n}: det {det} != {rhs}"));
        }
    }
    suite.finish()
}

/// Set partitions of `k` labeled objects into exactly `m` blocks, counted by
/// walking restricted growth strings.
pub fn count_set_partitions(k: usize, m: usize) -> u64 {
    fn walk(pos: usize, k: usize, blocks: usize, m: usize) -> u64 {
        if pos == k {
            return u64::from(blocks == m);
        }
        // element `pos` joins an open block or opens the next one
        let mut total = 0;
        for b in 0..=blocks {
            let next = if b == blocks { blocks + 1 } else { blocks };
            if next <= m {
                total += walk(pos + 1, k, next, m);
            }
        }
        total
    }
    walk(0, k, 0, m)
}

fn stirling_table(table: &StirlingTable) -> SuiteResult {
    let mut suite = Suite::new("stirling-table");
    let violation = table.find_violation();
    suite.check(violation.is_none(), || format!("recurrence or boundary broken at {violation:?}"));
    for k in 0..=8 {
        for m in 0..=k {
            let expected = BigInt::from(count_set_partitions(k, m));
            let got = table.get(k, m);
            suite.check(got == expected, || format!("S({k},{m}) = {got}, enumeration gives {expected}"));
        }
    }
    suite.check(superfactorial(5) == BigInt::from(34560), || "superfactorial(5) != 34560".into());
    suite.finish()
}

fn closed_form_specializations(table: &StirlingTable) -> SuiteResult {
    let mut suite = Suite::new("closed-form-specializations");
    let mut rng = random::rng(0x5eed_000d);
    for _ in 0..5 {
        let v = random::nonzero_rational(&mut rng);
        let zero = Rational::zero();
        for n in 0..=8 {
            suite.check(rhs_t3_with(table, &zero, &v, n) == rhs_t1(&v, n), || format!("b20 = 0, b11 = {v}, n = {n}"));
            suite.check(rhs_t3_with(table, &v, &zero, n) == rhs_t2(&v, n), || format!("b11 = 0, b20 = {v}, n = {n}"));
        }
    }
    let (b20, b11) = (MultiPoly::var(2, 0), MultiPoly::var(1, 1));
    for n in 0..=5 {
        let symbolic = rhs_t3_with(table, &b20, &b11, n);
        for _ in 0..3 {
            let (x, y) = (random::small_rational(&mut rng), random::small_rational(&mut rng));
            let sigma = BTreeMap::from([(Var::new(2, 0), x.clone()), (Var::new(1, 1), y.clone())]);
            let value = symbolic.eval(&sigma).unwrap();
            suite.check(value == rhs_t3_with(table, &x, &y, n), || format!("symbolic vs numeric at n = {n}"));
        }
    }
    suite.finish()
}

fn bivariate_identity(table: &StirlingTable) -> SuiteResult {
    let mut suite = Suite::new("bivariate-determinant-identity");
    let mut rng = random::rng(0x5eed_000e);
    for _ in 0..10 {
        let f = random::bivariate_series(&mut rng, 7);
        let (b20, b11) = (f.coeff(2, 0).unwrap(), f.coeff(1, 1).unwrap());
        for n in 0..=6 {
            let det = det_bareiss(&build_matrix_t3(&f, n).unwrap()).unwrap();
            let rhs = rhs_t3_with(table, &b20, &b11, n);
            suite.check(det == rhs, || format!("n = {n}: det {det} != closed form {rhs}"));
        }
    }
    suite.finish()
}
