//! JSON file form of series.
//!
//! ```text
//! {"kind":"uni","order":N,"coeffs":["c0","c1",...]}
//! {"kind":"bi","order":N,"terms":[{"m":1,"n":0,"c":"1"},...]}
//! ```
//!
//! Scalars use the rational text form `p` or `p/q`.

use serde::{Deserialize, Serialize};

use super::{BiSeries, SeriesError, UniSeries};
use crate::ring::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum SeriesDoc {
    #[serde(rename = "uni")]
    Uni { order: usize, coeffs: Vec<String> },
    #[serde(rename = "bi")]
    Bi { order: usize, terms: Vec<TermDoc> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub m: u32,
    pub n: u32,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedSeries {
    Uni(UniSeries<Rational>),
    Bi(BiSeries<Rational>),
}

fn scalar(text: &str) -> Result<Rational, SeriesError> {
    text.parse().map_err(|e: crate::ring::RingError| SeriesError::Format(e.to_string()))
}

impl SeriesDoc {
    pub fn into_series(self) -> Result<ParsedSeries, SeriesError> {
        match self {
            SeriesDoc::Uni { order, coeffs } => {
                if coeffs.len() != order + 1 {
                    return Err(SeriesError::Format(format!(
                        "order {order} needs {} coefficients, found {}",
                        order + 1,
                        coeffs.len()
                    )));
                }
                let coeffs = coeffs.iter().map(|c| scalar(c)).collect::<Result<Vec<_>, _>>()?;
                Ok(ParsedSeries::Uni(UniSeries::new(coeffs)?))
            }
            SeriesDoc::Bi { order, terms } => {
                let terms =
                    terms.iter().map(|t| Ok((t.m, t.n, scalar(&t.c)?))).collect::<Result<Vec<_>, SeriesError>>()?;
                Ok(ParsedSeries::Bi(BiSeries::new(order, terms)?))
            }
        }
    }
}

impl From<&UniSeries<Rational>> for SeriesDoc {
    fn from(s: &UniSeries<Rational>) -> Self {
        SeriesDoc::Uni { order: s.order(), coeffs: s.coeffs().iter().map(|c| c.to_string()).collect() }
    }
}

impl From<&BiSeries<Rational>> for SeriesDoc {
    fn from(s: &BiSeries<Rational>) -> Self {
        SeriesDoc::Bi {
            order: s.order(),
            terms: s.terms().iter().map(|(&(m, n), c)| TermDoc { m, n, c: c.to_string() }).collect(),
        }
    }
}

pub fn parse_series(text: &str) -> Result<ParsedSeries, SeriesError> {
    let doc: SeriesDoc = serde_json::from_str(text).map_err(|e| SeriesError::Format(e.to_string()))?;
    doc.into_series()
}
