use std::time::Instant;

use rayon::prelude::*;

use super::{read_series, Case, CliError, DetArgs, Theorem, VerifyArgs, VerifyReport};
use crate::closedform::{rhs_mina, rhs_t1, rhs_t2, rhs_t3};
use crate::detmat::{
    build_matrix_mina, build_matrix_t1, build_matrix_t2, build_matrix_t3, det_bareiss, det_division_free, RingMatrix,
};
use crate::random;
use crate::ring::{Rational, Scalar};
use crate::series::{BiSeries, ParsedSeries, UniSeries};

/// When no seed is given for random inputs.
pub const DEFAULT_SEED: u64 = 0;

/// Default truncation order: the minimum each builder needs, and a wider
/// window for the derivative identity so the compared series are not
/// trivially short.
pub fn default_order(theorem: Theorem, n_max: usize) -> usize {
    match theorem {
        Theorem::Powers => n_max,
        Theorem::Iterates | Theorem::Bivariate => n_max + 1,
        Theorem::Derivatives => n_max + 9,
    }
}

fn required_order(theorem: Theorem, n: usize) -> usize {
    match theorem {
        Theorem::Powers | Theorem::Derivatives => n,
        Theorem::Iterates | Theorem::Bivariate => n + 1,
    }
}

#[derive(Clone, Debug)]
enum TrialInput {
    Uni(UniSeries<Rational>),
    Bi(BiSeries<Rational>),
}

impl TrialInput {
    fn order(&self) -> usize {
        match self {
            TrialInput::Uni(s) => s.order(),
            TrialInput::Bi(s) => s.order(),
        }
    }

    fn truncate(&self, order: usize) -> Result<Self, CliError> {
        Ok(match self {
            TrialInput::Uni(s) => TrialInput::Uni(s.truncate(order)?),
            TrialInput::Bi(s) => TrialInput::Bi(s.truncate(order)?),
        })
    }
}

fn load_input(theorem: Theorem, path: &std::path::Path) -> Result<TrialInput, CliError> {
    match (theorem, read_series(path)?) {
        (Theorem::Bivariate, ParsedSeries::Bi(f)) => Ok(TrialInput::Bi(f)),
        (Theorem::Bivariate, ParsedSeries::Uni(_)) => {
            Err(CliError::Usage(format!("{}: theorem 3 needs a bivariate (\"kind\":\"bi\") series", path.display())))
        }
        (_, ParsedSeries::Uni(f)) => Ok(TrialInput::Uni(f)),
        (t, ParsedSeries::Bi(_)) => Err(CliError::Usage(format!(
            "{}: theorem {t} needs a univariate (\"kind\":\"uni\") series",
            path.display()
        ))),
    }
}

fn apply_order(input: TrialInput, order: Option<usize>) -> Result<TrialInput, CliError> {
    match order {
        None => Ok(input),
        Some(o) if o > input.order() => {
            Err(CliError::Usage(format!("--order {o} exceeds the input series order {}", input.order())))
        }
        Some(o) => input.truncate(o),
    }
}

fn generate(theorem: Theorem, rng: &mut random::CaseRng, order: usize) -> TrialInput {
    match theorem {
        Theorem::Powers => TrialInput::Uni(random::power_series(rng, order)),
        Theorem::Iterates => TrialInput::Uni(random::iteration_series(rng, order)),
        Theorem::Bivariate => TrialInput::Bi(random::bivariate_series(rng, order)),
        Theorem::Derivatives => TrialInput::Uni(random::derivative_series(rng, order)),
    }
}

fn uni_coeff(f: &UniSeries<Rational>, j: usize) -> Rational {
    f.coeff(j).cloned().unwrap_or_else(|_| Rational::zero())
}

fn bi_coeff(f: &BiSeries<Rational>, m: u32, n: u32) -> Rational {
    f.coeff(m, n).unwrap_or_else(|_| Rational::zero())
}

fn scalar_matrix(theorem: Theorem, input: &TrialInput, n: usize) -> Result<RingMatrix<Rational>, CliError> {
    Ok(match (theorem, input) {
        (Theorem::Powers, TrialInput::Uni(f)) => build_matrix_t1(f, n)?,
        (Theorem::Iterates, TrialInput::Uni(f)) => build_matrix_t2(f, n)?,
        (Theorem::Bivariate, TrialInput::Bi(f)) => build_matrix_t3(f, n)?,
        (t, _) => return Err(CliError::Usage(format!("no scalar matrix for theorem {t} with this input"))),
    })
}

fn run_case(theorem: Theorem, trial: usize, input: &TrialInput, n: usize) -> Result<Case, CliError> {
    let (det, rhs) = match (theorem, input) {
        (Theorem::Derivatives, TrialInput::Uni(f)) => {
            let det = det_division_free(&build_matrix_mina(f, n)?);
            let rhs = rhs_mina(f, n)?;
            return Ok(Case {
                trial,
                n,
                matches: det == rhs,
                determinant: det.to_string(),
                closed_form: rhs.to_string(),
            });
        }
        (Theorem::Powers, TrialInput::Uni(f)) => {
            (det_bareiss(&scalar_matrix(theorem, input, n)?)?, rhs_t1(&uni_coeff(f, 1), n))
        }
        (Theorem::Iterates, TrialInput::Uni(f)) => {
            (det_bareiss(&scalar_matrix(theorem, input, n)?)?, rhs_t2(&uni_coeff(f, 2), n))
        }
        (Theorem::Bivariate, TrialInput::Bi(f)) => {
            let rhs = rhs_t3(&bi_coeff(f, 2, 0), &bi_coeff(f, 1, 1), n);
            (det_bareiss(&scalar_matrix(theorem, input, n)?)?, rhs)
        }
        (t, _) => return Err(CliError::Usage(format!("input kind does not fit theorem {t}"))),
    };
    Ok(Case { trial, n, matches: det == rhs, determinant: det.to_string(), closed_form: rhs.to_string() })
}

/// Builds every matrix for `n = 0..=n_max` and each trial, takes its exact
/// determinant and compares with the closed form.
pub fn cmd_verify(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let theorem = args.theorem;
    let (inputs, seed, trials) = match &args.input {
        Some(path) => (vec![apply_order(load_input(theorem, path)?, args.order)?], None, 1),
        None => {
            if args.trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            let seed = args.seed.unwrap_or(DEFAULT_SEED);
            let order = args.order.unwrap_or_else(|| default_order(theorem, args.n_max));
            if theorem == Theorem::Iterates && order == 0 {
                return Err(CliError::Usage("theorem 2 needs --order >= 1".into()));
            }
            let mut rng = random::rng(seed);
            let inputs = (0..args.trials).map(|_| generate(theorem, &mut rng, order)).collect();
            (inputs, Some(seed), args.trials)
        }
    };
    let order = inputs[0].order();
    let needed = required_order(theorem, args.n_max);
    if order < needed {
        return Err(CliError::Usage(format!(
            "series order {order} is too small for --n-max {}: need at least {needed}",
            args.n_max
        )));
    }
    let per_trial: Vec<Vec<Case>> = inputs
        .par_iter()
        .enumerate()
        .map(|(trial, input)| (0..=args.n_max).map(|n| run_case(theorem, trial, input, n)).collect())
        .collect::<Result<_, CliError>>()?;
    let cases: Vec<Case> = per_trial.into_iter().flatten().collect();
    let success = cases.iter().all(|c| c.matches);
    Ok(VerifyReport {
        theorem,
        n_max: args.n_max,
        order,
        trials,
        seed,
        input: args.input.as_ref().map(|p| p.display().to_string()),
        cases,
        success,
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetOutput {
    pub determinant: String,
    pub dump: Option<String>,
}

pub fn cmd_det(args: &DetArgs) -> Result<DetOutput, CliError> {
    if args.theorem == Theorem::Derivatives {
        return Err(CliError::Usage("det supports theorems 1, 2 and 3".into()));
    }
    let input = apply_order(load_input(args.theorem, &args.input)?, args.order)?;
    let matrix = scalar_matrix(args.theorem, &input, args.n)?;
    let det = det_bareiss(&matrix)?;
    Ok(DetOutput { determinant: det.to_string(), dump: args.dump_matrix.then(|| matrix.dump()) })
}
