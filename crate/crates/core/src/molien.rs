//! Finite 2×2 matrix groups over cyclotomic fields and their bivariate
//! Molien series
//!
//! ```text
//! f(u, v) = 1/|G| Σ_g 1 / (det(1 − u g) det(1 − v g)).
//! ```
//!
//! Each factor `1/det(1 − u g) = 1/(1 − τu + δu²)` expands through the
//! recurrence `c_0 = 1`, `c_1 = τ`, `c_m = τ c_{m−1} − δ c_{m−2}`, so no
//! cyclotomic division is ever needed.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num::{BigInt, BigRational, Integer, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cyclo::{sqrt3_inverse, CycloNumber};
use crate::expr;
use crate::poly::SparsePoly;

/// Default closure bound for [`group_closure`].
pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// Default truncation degree of a [`MolienTable`].
pub const DEFAULT_MAX_DEGREE: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MolienError {
    #[error("matrix is singular")]
    Singular,
    #[error("closure exceeded {0} elements; the generators may not generate a finite group")]
    BoundExceeded(usize),
    #[error("coefficient of u^{i} v^{j} is {value}, not a nonnegative integer")]
    NonIntegral { i: usize, j: usize, value: String },
    #[error("degree {d} is beyond the table's maximum degree {max}")]
    DegreeTooLarge { d: usize, max: usize },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("denominator must be an integer polynomial in one variable: {0}")]
    BadDenominator(String),
}

/// A 2×2 matrix with entries in a common cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    entries: [[CycloNumber; 2]; 2],
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[{}, {}; {}, {}]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

impl GroupElement {
    /// Entries are lifted to the least common conductor; singular matrices
    /// are rejected.
    pub fn new(entries: [[CycloNumber; 2]; 2]) -> Result<Self, MolienError> {
        let n = entries.iter().flatten().fold(1u32, |acc, e| acc.lcm(&e.conductor()));
        let g = GroupElement { entries: entries.map(|row| row.map(|e| e.lift(n))) };
        if g.det().is_zero() {
            return Err(MolienError::Singular);
        }
        Ok(g)
    }

    pub fn identity(conductor: u32) -> Self {
        let (one, zero) = (CycloNumber::one(conductor), CycloNumber::zero(conductor));
        GroupElement { entries: [[one.clone(), zero.clone()], [zero, one]] }
    }

    pub fn conductor(&self) -> u32 {
        self.entries[0][0].conductor()
    }

    pub fn entries(&self) -> &[[CycloNumber; 2]; 2] {
        &self.entries
    }

    fn lift(&self, n: u32) -> Self {
        GroupElement { entries: self.entries.clone().map(|row| row.map(|e| e.lift(n))) }
    }

    pub fn trace(&self) -> CycloNumber {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn det(&self) -> CycloNumber {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let n = self.conductor().lcm(&other.conductor());
        let (a, b) = (self.lift(n), other.lift(n));
        let (a, b) = (&a.entries, &b.entries);
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        GroupElement { entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]] }
    }
}

/// Breadth-first closure of the generators under multiplication.
pub fn group_closure(generators: &[GroupElement], bound: usize) -> Result<Vec<GroupElement>, MolienError> {
    let n = generators.iter().fold(1u32, |acc, g| acc.lcm(&g.conductor()));
    let gens: Vec<GroupElement> = generators.iter().map(|g| g.lift(n)).collect();
    let identity = GroupElement::identity(n);
    let mut seen: HashSet<GroupElement> = HashSet::from([identity.clone()]);
    let mut order = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for h in &gens {
            let p = g.mul(h);
            if seen.insert(p.clone()) {
                if seen.len() > bound {
                    return Err(MolienError::BoundExceeded(bound));
                }
                order.push(p.clone());
                queue.push_back(p);
            }
        }
    }
    Ok(order)
}

/// Generators of the built-in groups: `g3` (order 48, invariants of
/// ternary self-dual codes), `g4` (order 12, Hermitian self-dual codes over
/// `F_4`) and `identity`.
pub fn named_generators(name: &str) -> Result<Vec<GroupElement>, MolienError> {
    let q = |n: i64, d: i64| CycloNumber::from_rational(1, BigRational::new(n.into(), d.into()));
    Ok(match name {
        "g3" => {
            let s = sqrt3_inverse();
            let two_s = s.scale(&BigRational::from_integer(2.into()));
            vec![
                GroupElement::new([[s.clone(), two_s], [s.clone(), -s]])?,
                GroupElement::new([[q(1, 1), q(0, 1)], [q(0, 1), CycloNumber::zeta_power(12, 4)]])?,
            ]
        }
        "g4" => vec![
            GroupElement::new([[q(1, 2), q(3, 2)], [q(1, 2), q(-1, 2)]])?,
            GroupElement::new([[q(1, 1), q(0, 1)], [q(0, 1), q(-1, 1)]])?,
        ],
        "identity" => vec![GroupElement::identity(1)],
        other => return Err(MolienError::UnknownGroup(other.to_string())),
    })
}

/// Read generators from text:
///
/// ```text
/// conductor 4
/// # one generator per line, rows separated by `;`
/// [z, 0; 0, -z]
/// ```
///
/// Entries are polynomials in `z = ζ_N` with rational coefficients.
pub fn parse_generators(text: &str) -> Result<Vec<GroupElement>, MolienError> {
    let err = |line: usize, message: String| MolienError::Parse { line, message };
    let mut conductor: Option<u32> = None;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(n) = conductor else {
            let value = line.strip_prefix("conductor").ok_or_else(|| err(line_no, "expected `conductor N`".into()))?;
            let n: u32 = value.trim().parse().map_err(|_| err(line_no, format!("bad conductor `{}`", value.trim())))?;
            if n == 0 {
                return Err(err(line_no, "conductor must be positive".into()));
            }
            conductor = Some(n);
            continue;
        };
        let body = line.trim_start_matches('[').trim_end_matches(']');
        let rows: Vec<&str> = body.split(';').collect();
        if rows.len() != 2 {
            return Err(err(line_no, "expected two rows separated by `;`".into()));
        }
        let mut entries: Vec<CycloNumber> = Vec::with_capacity(4);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(err(line_no, "expected two entries per row".into()));
            }
            for cell in cells {
                entries.push(parse_entry(cell, n).map_err(|m| err(line_no, m))?);
            }
        }
        let [a, b, c, d]: [CycloNumber; 4] = entries.try_into().expect("four entries");
        out.push(GroupElement::new([[a, b], [c, d]]).map_err(|e| err(line_no, e.to_string()))?);
    }
    if out.is_empty() {
        return Err(err(text.lines().count().max(1), "no generators".into()));
    }
    Ok(out)
}

fn parse_entry(text: &str, conductor: u32) -> Result<CycloNumber, String> {
    let named = expr::parse(text)?;
    let mut powers: Vec<BigRational> = Vec::new();
    for (mono, c) in named.0 {
        let k = match mono.as_slice() {
            [] => 0,
            [(name, k)] if name == "z" => *k as usize,
            _ => return Err(format!("entry `{}` may only use the variable z", text.trim())),
        };
        if powers.len() <= k {
            powers.resize(k + 1, BigRational::zero());
        }
        powers[k] += c;
    }
    Ok(CycloNumber::from_powers(conductor, powers))
}

/// Truncated bivariate Molien series: `c_{ij}` for `i + j ≤ D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolienTable {
    max_degree: usize,
    group_order: usize,
    /// `coeffs[i][j]`, defined for `i + j ≤ max_degree`.
    coeffs: Vec<Vec<u64>>,
}

/// Coefficients of `1/(1 − τu + δu²)` up to `u^max`.
fn series(tau: &CycloNumber, delta: &CycloNumber, max: usize) -> Vec<CycloNumber> {
    let n = tau.conductor();
    let mut c = vec![CycloNumber::one(n)];
    if max >= 1 {
        c.push(tau.clone());
    }
    for m in 2..=max {
        let next = &(tau * &c[m - 1]) - &(delta * &c[m - 2]);
        c.push(next);
    }
    c
}

/// Expand `f(u, v)` up to total degree `max_degree`.
pub fn molien_bivariate(group: &[GroupElement], max_degree: usize) -> Result<MolienTable, MolienError> {
    // elements with the same trace and determinant contribute the same series
    let mut classes: HashMap<(CycloNumber, CycloNumber), usize> = HashMap::new();
    let n = group.iter().fold(1u32, |acc, g| acc.lcm(&g.conductor()));
    for g in group {
        let g = g.lift(n);
        *classes.entry((g.trace(), g.det())).or_insert(0) += 1;
    }
    let expansions: Vec<(BigRational, Vec<CycloNumber>)> = classes
        .into_iter()
        .map(|((tau, delta), mult)| (BigRational::from_integer(mult.into()), series(&tau, &delta, max_degree)))
        .collect();
    let order = BigRational::from_integer(group.len().into());
    let mut coeffs = Vec::with_capacity(max_degree + 1);
    for i in 0..=max_degree {
        let mut row = Vec::with_capacity(max_degree + 1 - i);
        for j in 0..=max_degree - i {
            let mut acc = CycloNumber::zero(n);
            for (mult, s) in &expansions {
                acc = &acc + &(&s[i] * &s[j]).scale(mult);
            }
            let value = acc.as_rational().map(|r| r / &order);
            match value.as_ref().filter(|r| r.is_integer() && !r.is_negative()).and_then(|r| r.to_integer().to_u64()) {
                Some(c) => row.push(c),
                None => {
                    let shown = value.map_or_else(|| acc.to_string(), |r| r.to_string());
                    return Err(MolienError::NonIntegral { i, j, value: shown });
                }
            }
        }
        coeffs.push(row);
    }
    Ok(MolienTable { max_degree, group_order: group.len(), coeffs })
}

impl MolienTable {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// `c_{ij}`, the coefficient of `u^i v^j`.
    pub fn coefficient(&self, i: usize, j: usize) -> Option<u64> {
        self.coeffs.get(i).and_then(|row| row.get(j)).copied()
    }

    /// `f[d] = Σ_{i+j=d} c_{ij} u^i v^j`, as a polynomial in `x_0 = u`,
    /// `x_1 = v`; render it with `render_named(["u", "v"])`.
    pub fn homogeneous_part(&self, d: usize) -> Result<SparsePoly, MolienError> {
        if d > self.max_degree {
            return Err(MolienError::DegreeTooLarge { d, max: self.max_degree });
        }
        Ok(SparsePoly::from_counts(
            0,
            (0..=d).map(|i| (vec![i as u32, (d - i) as u32], self.coeffs[i][d - i])).filter(|(_, c)| *c > 0),
        ))
    }

    /// Rows `i,j,c` ordered by total degree, then by descending `i`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,c\n");
        for d in 0..=self.max_degree {
            for i in (0..=d).rev() {
                out.push_str(&format!("{},{},{}\n", i, d - i, self.coeffs[i][d - i]));
            }
        }
        out
    }
}

/// Result of [`verify_denominator`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorCheck {
    /// First `(i, j, value)` that should vanish but does not.
    pub violation: Option<(usize, usize, BigInt)>,
    /// Number of coefficients inside the checked window.
    pub checked: usize,
}

impl DenominatorCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Multiply the truncated series by `d_u(u) d_v(v)` and check that the
/// product looks like a numerator: every coefficient of `u^i v^j` with
/// `i + j ≤ D` and `i ≥ deg d_u` or `j ≥ deg d_v` must vanish. Polynomials
/// are given as integer coefficients, lowest degree first.
pub fn verify_denominator(table: &MolienTable, d_u: &[i64], d_v: &[i64], max_degree: usize) -> DenominatorCheck {
    let max_degree = max_degree.min(table.max_degree);
    let deg = |p: &[i64]| p.iter().rposition(|&c| c != 0).unwrap_or(0);
    let (du, dv) = (deg(d_u), deg(d_v));
    let mut checked = 0;
    for total in 0..=max_degree {
        for i in 0..=total {
            let j = total - i;
            if i < du && j < dv {
                continue;
            }
            let mut value = BigInt::zero();
            for (a, &ca) in d_u.iter().enumerate().take(i + 1) {
                if ca == 0 {
                    continue;
                }
                for (b, &cb) in d_v.iter().enumerate().take(j + 1) {
                    if cb != 0 {
                        value += BigInt::from(ca) * BigInt::from(cb) * BigInt::from(table.coeffs[i - a][j - b]);
                    }
                }
            }
            checked += 1;
            if !value.is_zero() {
                return DenominatorCheck { violation: Some((i, j, value)), checked };
            }
        }
    }
    DenominatorCheck { violation: None, checked }
}

/// Read an integer polynomial in a single variable (`u` or `v`), e.g.
/// `(1-u^4)(1-u^12)`, as coefficients lowest degree first.
pub fn parse_univariate(text: &str) -> Result<Vec<i64>, MolienError> {
    let bad = |m: String| MolienError::BadDenominator(m);
    let named = expr::parse(text).map_err(bad)?;
    let mut out: Vec<i64> = Vec::new();
    let mut var: Option<String> = None;
    for (mono, c) in named.0 {
        let k = match mono.as_slice() {
            [] => 0,
            [(name, k)] => {
                if var.get_or_insert_with(|| name.clone()) != name {
                    return Err(bad(format!("`{text}` mixes variables")));
                }
                *k as usize
            }
            _ => return Err(bad(format!("`{text}` mixes variables"))),
        };
        if !c.is_integer() {
            return Err(bad(format!("coefficient {c} is not an integer")));
        }
        let c = c.to_integer().to_i64().ok_or_else(|| bad("coefficient too large".into()))?;
        if out.len() <= k {
            out.resize(k + 1, 0);
        }
        out[k] += c;
    }
    if out.is_empty() {
        out.push(0);
    }
    Ok(out)
}

/// Diagonal `v = 0` of the series, computed on its own:
/// `1/|G| Σ_g 1/det(1 − u g)` up to `u^D`.
pub fn molien_univariate(group: &[GroupElement], max_degree: usize) -> Vec<BigRational> {
    let order = BigRational::from_integer(group.len().into());
    let mut acc = vec![CycloNumber::zero(1); max_degree + 1];
    for g in group {
        for (a, s) in acc.iter_mut().zip(series(&g.trace(), &g.det(), max_degree)) {
            *a = &*a + &s;
        }
    }
    acc.into_iter().map(|a| a.as_rational().expect("rational coefficient") / &order).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> Vec<GroupElement> {
        group_closure(&named_generators(name).unwrap(), DEFAULT_CLOSURE_BOUND).unwrap()
    }

    fn part(table: &MolienTable, d: usize) -> String {
        table.homogeneous_part(d).unwrap().render_named(["u", "v"])
    }

    #[test]
    fn orders() {
        assert_eq!(group("g3").len(), 48);
        assert_eq!(group("g4").len(), 12);
        assert_eq!(group("identity").len(), 1);
    }

    #[test]
    fn closure_is_idempotent() {
        let g = group("g4");
        assert_eq!(group_closure(&g, DEFAULT_CLOSURE_BOUND).unwrap().len(), g.len());
    }

    #[test]
    fn closure_bound() {
        let g = named_generators("g3").unwrap();
        assert_eq!(group_closure(&g, 10), Err(MolienError::BoundExceeded(10)));
        let infinite = GroupElement::new([
            [CycloNumber::from_integer(1, 1), CycloNumber::from_integer(1, 1)],
            [CycloNumber::from_integer(1, 0), CycloNumber::from_integer(1, 1)],
        ])
        .unwrap();
        assert_eq!(group_closure(&[infinite], 100), Err(MolienError::BoundExceeded(100)));
    }

    #[test]
    fn singular_matrices_are_rejected() {
        let z = CycloNumber::zero(1);
        assert_eq!(GroupElement::new([[z.clone(), z.clone()], [z.clone(), z]]), Err(MolienError::Singular));
    }

    #[test]
    fn small_parts() {
        let g4 = molien_bivariate(&group("g4"), 6).unwrap();
        assert_eq!(part(&g4, 2), "u^2+uv+v^2");
        assert_eq!(part(&g4, 6), "2u^6+2u^5v+3u^4v^2+3u^3v^3+3u^2v^4+2uv^5+2v^6");
        let g3 = molien_bivariate(&group("g3"), 8).unwrap();
        assert_eq!(part(&g3, 4), "u^4+u^3v+u^2v^2+uv^3+v^4");
        assert_eq!(part(&g3, 0), "1");
        let id = molien_bivariate(&group("identity"), 3).unwrap();
        // the 2×2 identity fixes every polynomial: (i+1)(j+1) of bidegree (i, j)
        assert_eq!(part(&id, 3), "4u^3+6u^2v+6uv^2+4v^3");
        assert_eq!(id.homogeneous_part(4), Err(MolienError::DegreeTooLarge { d: 4, max: 3 }));
    }

    #[test]
    fn table_invariants() {
        for name in ["g3", "g4"] {
            let g = group(name);
            let t = molien_bivariate(&g, 24).unwrap();
            assert_eq!(t.coefficient(0, 0), Some(1));
            for i in 0..=24 {
                for j in 0..=24 - i {
                    assert_eq!(t.coefficient(i, j), t.coefficient(j, i));
                }
            }
            let uni = molien_univariate(&g, 24);
            for (d, c) in uni.iter().enumerate() {
                assert_eq!(BigRational::from_integer(t.coefficient(d, 0).unwrap().into()), *c, "{name}, degree {d}");
            }
        }
    }

    #[test]
    fn denominators() {
        let g3 = molien_bivariate(&group("g3"), 28).unwrap();
        let d = parse_univariate("(1-u^4)(1-u^12)").unwrap();
        let factored = parse_univariate("(u-1)^2(u+1)^2(u^2+1)^2(u^2-u+1)(u^2+u+1)(u^4-u^2+1)").unwrap();
        assert_eq!(d, factored);
        assert!(verify_denominator(&g3, &d, &d, 28).holds());

        let id = molien_bivariate(&group("identity"), 10).unwrap();
        let one_minus_u = parse_univariate("1-u").unwrap();
        let square = parse_univariate("(1-u)^2").unwrap();
        assert!(verify_denominator(&id, &square, &square, 10).holds());
        assert!(!verify_denominator(&id, &one_minus_u, &one_minus_u, 10).holds());

        let g3_small = molien_bivariate(&group("g3"), 10).unwrap();
        assert!(!verify_denominator(&g3_small, &one_minus_u, &one_minus_u, 10).holds());
    }

    #[test]
    fn group_files() {
        let text = "# the group G4\nconductor 1\n[1/2, 3/2; 1/2, -1/2]\n[1, 0; 0, -1]\n";
        let g = group_closure(&parse_generators(text).unwrap(), DEFAULT_CLOSURE_BOUND).unwrap();
        assert_eq!(g.len(), 12);
        let text = "conductor 12\n[1/3(z+z^11), 2/3(z+z^11); 1/3(z+z^11), -1/3(z+z^11)]\n[1,0;0,z^4]\n";
        let g = group_closure(&parse_generators(text).unwrap(), DEFAULT_CLOSURE_BOUND).unwrap();
        assert_eq!(g.len(), 48);
        assert!(matches!(parse_generators("[1,0;0,1]"), Err(MolienError::Parse { line: 1, .. })));
        assert!(matches!(parse_generators("conductor 4\n[1,0;0]"), Err(MolienError::Parse { line: 2, .. })));
        assert!(matches!(parse_generators("conductor 4\n[1,0;0,q]"), Err(MolienError::Parse { line: 2, .. })));
        assert!(matches!(parse_generators("conductor 4\n"), Err(MolienError::Parse { .. })));
    }

    #[test]
    fn univariate_parsing() {
        assert_eq!(parse_univariate("1-u").unwrap(), vec![1, -1]);
        assert_eq!(parse_univariate("(1-v)^2").unwrap(), vec![1, -2, 1]);
        assert!(parse_univariate("u+v").is_err());
        assert!(parse_univariate("1/2u").is_err());
    }
}
