//! Golden cases: expected outputs stored as TOML and re-derived on demand.
//!
//! A file holds a list of `[[case]]` tables, each tagged with a `kind`:
//!
//! ```toml
//! [[case]]
//! name = "tetracode-J1"
//! kind = "jacobi-polarization"
//! code = "tetracode"
//! t = [1]
//! direct = true
//! expect = "w(x^3+2y^3)+6zxy^2"
//! ```
//!
//! Polynomials are compared after parsing, so any term order or grouping of
//! the expected text is accepted.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::code::LinearCode;
use crate::design::{blocks_from_code, design_report, parse_parameters, BlockMode};
use crate::jacobi::{jacobi_set, jacobi_via_polarization, weight_enumerator};
use crate::molien::{group_closure, molien_bivariate, named_generators, parse_univariate, verify_denominator, DEFAULT_CLOSURE_BOUND};
use crate::poly::{SparsePoly, Style};

/// Suites compiled into the binary, by name.
pub const BUILTIN: &[(&str, &str)] = &[
    ("type3", include_str!("../../golden/type3.toml")),
    ("type4", include_str!("../../golden/type4.toml")),
    ("molien", include_str!("../../golden/molien.toml")),
];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GoldenFile {
    #[serde(default)]
    case: Vec<Case>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Case {
    pub name: String,
    #[serde(flatten)]
    pub check: Check,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Check {
    WeightEnumerator {
        code: String,
        expect: String,
    },
    JacobiSet {
        code: String,
        #[serde(rename = "T")]
        set: Vec<usize>,
        expect: String,
    },
    /// `expect` is reached by polarizing the weight enumerator; with `direct`
    /// the enumeration over consecutive reference supports must agree.
    JacobiPolarization {
        code: String,
        t: Vec<usize>,
        expect: String,
        #[serde(default)]
        direct: bool,
    },
    Design {
        code: String,
        k: usize,
        t: usize,
        #[serde(default = "support_set")]
        mode: String,
        parameters: String,
        statement: String,
    },
    /// With `partial` only the listed terms are compared.
    MolienPart {
        group: String,
        d: usize,
        expect: String,
        #[serde(default)]
        partial: bool,
    },
    GroupOrder {
        group: String,
        expect: usize,
    },
    Denominator {
        group: String,
        d_u: String,
        #[serde(default)]
        d_v: Option<String>,
        degree: usize,
        expect: bool,
    },
}

fn support_set() -> String {
    "support-set".into()
}

/// Result of one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail(why) => write!(f, "FAIL: {why}"),
        }
    }
}

/// Parse a golden file.
pub fn load(text: &str) -> Result<Vec<Case>, String> {
    toml::from_str::<GoldenFile>(text).map(|f| f.case).map_err(|e| e.to_string())
}

fn code(name: &str) -> Result<LinearCode, String> {
    LinearCode::catalog(name).map_err(|e| e.to_string())
}

fn group(name: &str) -> Result<Vec<crate::molien::GroupElement>, String> {
    let gens = named_generators(name).map_err(|e| e.to_string())?;
    group_closure(&gens, DEFAULT_CLOSURE_BOUND).map_err(|e| e.to_string())
}

fn compare(what: &str, got: &SparsePoly, expect: &str) -> Result<(), String> {
    let want = SparsePoly::parse(expect, got.ell()).map_err(|e| format!("bad expected {what}: {e}"))?;
    if &want == got {
        Ok(())
    } else {
        Err(format!("{what}: got {}, expected {}", got.render(Style::Styled), want.render(Style::Styled)))
    }
}

impl Case {
    pub fn run(&self) -> Verdict {
        match self.check.evaluate() {
            Ok(()) => Verdict::Pass,
            Err(why) => Verdict::Fail(why),
        }
    }
}

impl Check {
    fn evaluate(&self) -> Result<(), String> {
        match self {
            Check::WeightEnumerator { code: c, expect } => {
                let w = weight_enumerator(&code(c)?).map_err(|e| e.to_string())?;
                compare("weight enumerator", &w, expect)
            }
            Check::JacobiSet { code: c, set, expect } => {
                let j = jacobi_set(&code(c)?, set).map_err(|e| e.to_string())?;
                compare("Jacobi polynomial", &j, expect)
            }
            Check::JacobiPolarization { code: c, t, expect, direct } => {
                let c = code(c)?;
                let w = weight_enumerator(&c).map_err(|e| e.to_string())?;
                let p = jacobi_via_polarization(&w, t, c.length()).map_err(|e| e.to_string())?;
                compare("polarization", &p, expect)?;
                if *direct {
                    let supports = super::consecutive_supports(t);
                    let refs = crate::jacobi::ReferenceSet::from_supports(c.length(), &supports).map_err(|e| e.to_string())?;
                    let d = crate::jacobi::jacobi_multi(&c, &refs).map_err(|e| e.to_string())?;
                    compare("direct enumeration", &d, expect)?;
                }
                Ok(())
            }
            Check::Design { code: c, k, t, mode, parameters, statement } => {
                let mode: BlockMode = mode.parse()?;
                let family = blocks_from_code(&code(c)?, *k, mode).map_err(|e| e.to_string())?;
                let report = design_report(&family, *t).map_err(|e| e.to_string())?;
                let want = parse_parameters(parameters).ok_or_else(|| format!("bad expected parameters `{parameters}`"))?;
                let got = parse_parameters(&report.parameters).expect("reports parse");
                if !same_parameters(&got, &want, report.v, report.t) {
                    return Err(format!("parameters: got {}, expected {parameters}", report.parameters));
                }
                if &report.statement != statement {
                    return Err(format!("statement: got {}, expected {statement}", report.statement));
                }
                Ok(())
            }
            Check::MolienPart { group: g, d, expect, partial } => {
                let table = molien_bivariate(&group(g)?, *d).map_err(|e| e.to_string())?;
                let got = table.homogeneous_part(*d).map_err(|e| e.to_string())?;
                let want = SparsePoly::parse_named(expect, ["u", "v"]).map_err(|e| format!("bad expected f[{d}]: {e}"))?;
                let ok = if *partial {
                    want.terms().all(|(e, c)| &got.coefficient(e) == c)
                } else {
                    got == want
                };
                if ok {
                    Ok(())
                } else {
                    Err(format!("f[{d}]: got {}, expected {}", got.render_named(["u", "v"]), expect))
                }
            }
            Check::GroupOrder { group: g, expect } => {
                let n = group(g)?.len();
                if n == *expect {
                    Ok(())
                } else {
                    Err(format!("order: got {n}, expected {expect}"))
                }
            }
            Check::Denominator { group: g, d_u, d_v, degree, expect } => {
                let table = molien_bivariate(&group(g)?, *degree).map_err(|e| e.to_string())?;
                let du = parse_univariate(d_u).map_err(|e| e.to_string())?;
                let dv = match d_v {
                    Some(text) => parse_univariate(text).map_err(|e| e.to_string())?,
                    None => du.clone(),
                };
                let check = verify_denominator(&table, &du, &dv, *degree);
                if check.holds() == *expect {
                    Ok(())
                } else {
                    let detail = match &check.violation {
                        Some((i, j, v)) => format!(" (u^{i}v^{j} has coefficient {v})"),
                        None => String::new(),
                    };
                    Err(format!("denominator check gave {}, expected {expect}{detail}", check.holds()))
                }
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// A bare `λ` in a parameter string means every `t`-subset; expand it before
/// comparing histograms.
fn same_parameters(
    got: &(usize, usize, usize, BTreeMap<u64, u128>),
    want: &(usize, usize, usize, BTreeMap<u64, u128>),
    v: usize,
    t: usize,
) -> bool {
    let expand = |h: &BTreeMap<u64, u128>| -> BTreeMap<u64, u128> {
        h.iter().map(|(&l, &a)| (l, if a == 0 { binomial(v, t) } else { a })).collect()
    };
    (got.0, got.1, got.2) == (want.0, want.1, want.2) && expand(&got.3) == expand(&want.3)
}
