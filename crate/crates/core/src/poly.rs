//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! The variables are the family `x_a`, `a ∈ {0,1}^{ℓ+1}`. A variable is
//! addressed by its index `a_1 + 2 a_2 + … + 2^ℓ a_{ℓ+1}`, so the first bit
//! records whether the codeword coordinate is nonzero and bit `j` whether
//! reference vector `j` is. The index of a variable does not depend on `ℓ`,
//! which makes lifting a polynomial to more reference vectors free.
//!
//! Letter names follow the usual conventions: `x = x_{0…0}`, `y = x_{10…0}`;
//! with one reference vector `w = x_{01}`, `z = x_{11}`; with several,
//! `w<j>` and `z<j>` are the variables with a single extra 1 in slot `j + 1`.
//! Anything else renders as `x_{<bits>}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::expr;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials have different numbers of reference slots ({0} vs {1})")]
    ArityMismatch(usize, usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no image given for variable `{0}`")]
    Unmapped(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// One variable `x_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    ell: usize,
    index: usize,
}

impl VarId {
    pub fn from_index(ell: usize, index: usize) -> Self {
        assert!(index < 1 << (ell + 1), "variable index {index} out of range for ℓ = {ell}");
        VarId { ell, index }
    }

    /// From the bit pattern `(a_1, …, a_{ℓ+1})`.
    pub fn from_bits(bits: &[bool]) -> Self {
        assert!(!bits.is_empty(), "a variable needs at least one bit");
        let index = bits.iter().enumerate().map(|(i, &b)| (b as usize) << i).sum();
        VarId { ell: bits.len() - 1, index }
    }

    /// `x_0 = x_{(0,…,0)}`.
    pub fn x0(ell: usize) -> Self {
        Self::from_index(ell, 0)
    }

    /// `x_1 = x_{(1,0,…,0)}`.
    pub fn x1(ell: usize) -> Self {
        Self::from_index(ell, 1)
    }

    /// `w_j`: a single 1 in slot `j + 1`.
    pub fn w(ell: usize, j: usize) -> Self {
        assert!((1..=ell).contains(&j));
        Self::from_index(ell, 1 << j)
    }

    /// `z_j`: 1s in slots 1 and `j + 1`.
    pub fn z(ell: usize, j: usize) -> Self {
        assert!((1..=ell).contains(&j));
        Self::from_index(ell, (1 << j) | 1)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn bits(&self) -> Vec<bool> {
        (0..=self.ell).map(|i| self.index >> i & 1 == 1).collect()
    }

    pub fn raw_name(&self) -> String {
        let bits: String = self.bits().iter().map(|&b| if b { '1' } else { '0' }).collect();
        format!("x_{{{bits}}}")
    }

    pub fn styled_name(&self) -> String {
        let i = self.index;
        match (self.ell, i) {
            (_, 0) => "x".into(),
            (_, 1) => "y".into(),
            (1, 2) => "w".into(),
            (1, 3) => "z".into(),
            _ => {
                let high = i & !1;
                if high.is_power_of_two() {
                    let j = high.trailing_zeros();
                    format!("{}{}", if i & 1 == 0 { "w" } else { "z" }, j)
                } else {
                    self.raw_name()
                }
            }
        }
    }

    fn resolve(name: &str, ell: usize) -> Option<usize> {
        let slots = 1usize << (ell + 1);
        if let Some(bits) = name.strip_prefix("x_{").and_then(|s| s.strip_suffix('}')) {
            if bits.len() != ell + 1 {
                return None;
            }
            return Some(bits.chars().enumerate().map(|(i, b)| ((b == '1') as usize) << i).sum());
        }
        let index = match name {
            "x" => 0,
            "y" => 1,
            "w" if ell == 1 => 2,
            "z" if ell == 1 => 3,
            _ => {
                let (head, digits) = name.split_at(1);
                let j: usize = digits.parse().ok()?;
                if !(1..=ell).contains(&j) {
                    return None;
                }
                match head {
                    "w" => 1 << j,
                    "z" => (1 << j) | 1,
                    _ => return None,
                }
            }
        };
        (index < slots).then_some(index)
    }
}

/// Output flavour for [`SparsePoly::render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Letter names, grouped by the reference-variable part.
    Styled,
    /// `x_{bits}` names, one flat sum.
    Raw,
}

/// Exponent vector indexed by variable index.
pub type Exponents = Vec<u32>;

/// A polynomial in the `2^{ℓ+1}` variables `x_a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    ell: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly[ℓ={}]({})", self.ell, self.render(Style::Styled))
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Styled))
    }
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl SparsePoly {
    pub fn zero(ell: usize) -> Self {
        SparsePoly { ell, terms: BTreeMap::new() }
    }

    pub fn one(ell: usize) -> Self {
        Self::constant(ell, BigRational::one())
    }

    pub fn constant(ell: usize, c: BigRational) -> Self {
        Self::monomial(ell, vec![0; 1 << (ell + 1)], c)
    }

    pub fn var(v: VarId) -> Self {
        let mut exps = vec![0; 1 << (v.ell + 1)];
        exps[v.index] = 1;
        Self::monomial(v.ell, exps, BigRational::one())
    }

    pub fn monomial(ell: usize, exps: Exponents, c: BigRational) -> Self {
        assert_eq!(exps.len(), 1 << (ell + 1), "exponent vector has the wrong length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        SparsePoly { ell, terms }
    }

    /// Build from integer-counted exponent vectors, e.g. a codeword tally.
    pub fn from_counts<I>(ell: usize, counts: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, u64)>,
    {
        let mut p = Self::zero(ell);
        for (exps, c) in counts {
            assert_eq!(exps.len(), 1 << (ell + 1));
            p.add_term(exps, rat(c));
        }
        p
    }

    fn add_term(&mut self, exps: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Number of reference slots `ℓ`.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Number of variables, `2^{ℓ+1}`.
    pub fn arity(&self) -> usize {
        1 << (self.ell + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The same polynomial viewed with `new_ell ≥ ℓ` reference slots.
    pub fn embed(&self, new_ell: usize) -> Self {
        assert!(new_ell >= self.ell, "cannot embed ℓ = {} into ℓ = {new_ell}", self.ell);
        let width = 1 << (new_ell + 1);
        SparsePoly {
            ell: new_ell,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(width, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    fn check_arity(&self, other: &Self) -> Result<(), PolyError> {
        if self.ell == other.ell {
            Ok(())
        } else {
            Err(PolyError::ArityMismatch(self.ell, other.ell))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.ell);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ell);
        }
        SparsePoly { ell: self.ell, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ell);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn partial_derivative(&self, v: VarId) -> Self {
        assert!(v.index < self.arity(), "variable outside this polynomial ring");
        let mut out = Self::zero(self.ell);
        for (e, c) in &self.terms {
            let k = e[v.index];
            if k == 0 {
                continue;
            }
            let mut e = e.clone();
            e[v.index] -= 1;
            out.add_term(e, c * rat(k));
        }
        out
    }

    /// Replace each variable by an image polynomial (usually a linear form).
    ///
    /// `images[i]` is the image of the variable with index `i`; all images
    /// must share one `ℓ`, which becomes the `ℓ` of the result.
    pub fn substitute(&self, images: &[Option<SparsePoly>]) -> Result<Self, PolyError> {
        let target_ell = images.iter().flatten().map(|p| p.ell).next().unwrap_or(self.ell);
        if let Some(p) = images.iter().flatten().find(|p| p.ell != target_ell) {
            return Err(PolyError::ArityMismatch(target_ell, p.ell));
        }
        let mut powers: HashMap<(usize, u32), SparsePoly> = HashMap::new();
        let mut out = Self::zero(target_ell);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target_ell, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let image = images
                    .get(i)
                    .and_then(Option::as_ref)
                    .ok_or_else(|| PolyError::Unmapped(VarId::from_index(self.ell, i).styled_name()))?;
                let power = powers.entry((i, k)).or_insert_with(|| image.pow(k));
                term = &term * power;
            }
            for (e, c) in term.terms {
                out.add_term(e, c);
            }
        }
        Ok(out)
    }

    /// Linear change of variables; `map` gives each variable's image as a list
    /// of `(variable, coefficient)` pairs.
    pub fn substitute_linear(&self, map: &HashMap<VarId, Vec<(VarId, BigRational)>>) -> Result<Self, PolyError> {
        let target_ell = map.values().flatten().map(|(v, _)| v.ell).next().unwrap_or(self.ell);
        let mut images = vec![None; self.arity()];
        for (v, form) in map {
            if v.index >= self.arity() {
                continue;
            }
            let mut img = Self::zero(target_ell);
            for (w, c) in form {
                img = img.checked_add(&Self::var(*w).scale(c))?;
            }
            images[v.index] = Some(img);
        }
        self.substitute(&images)
    }

    /// Total degree of every term, if they all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        SparsePoly {
            ell: self.ell,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Value at all variables equal to 1.
    pub fn sum_of_coefficients(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    // ----- text -----

    /// Deterministic text form; see the module docs for the naming scheme.
    pub fn render(&self, style: Style) -> String {
        match style {
            Style::Raw => self.render_raw(),
            Style::Styled => self.render_styled(),
        }
    }

    fn render_raw(&self) -> String {
        // variables ordered by their bitstring a_1 a_2 … read left to right
        let mut order: Vec<usize> = (0..self.arity()).collect();
        order.sort_by_key(|&i| VarId::from_index(self.ell, i).bits().iter().map(|&b| b as u8).collect::<Vec<_>>());
        let names: Vec<String> = order.iter().map(|&i| VarId::from_index(self.ell, i).raw_name()).collect();
        let mut rows: Vec<(Vec<u32>, &BigRational)> =
            self.terms.iter().map(|(e, c)| (order.iter().map(|&i| e[i]).collect(), c)).collect();
        rows.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(&a.0))
        });
        let mut out = String::new();
        for (k, (exps, c)) in rows.iter().enumerate() {
            push_term(&mut out, k == 0, c, &monomial_text(exps, &names));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn render_styled(&self) -> String {
        let arity = self.arity();
        let mut refs: Vec<usize> = Vec::new();
        for j in 1..=self.ell {
            refs.push(1 << j);
            refs.push((1 << j) | 1);
        }
        for i in 2..arity {
            if !refs.contains(&i) {
                refs.push(i);
            }
        }
        let ref_names: Vec<String> = refs.iter().map(|&i| VarId::from_index(self.ell, i).styled_name()).collect();
        let xy_names = ["x".to_string(), "y".to_string()];

        type Terms<'a> = Vec<(Vec<u32>, &'a BigRational)>;
        let mut groups: BTreeMap<std::cmp::Reverse<Vec<u32>>, Terms> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u32> = refs.iter().map(|&i| e[i]).collect();
            groups.entry(std::cmp::Reverse(key)).or_default().push((vec![e[0], e[1]], c));
        }

        let mut out = String::new();
        for (std::cmp::Reverse(key), mut members) in groups {
            members.sort_by(|a, b| b.0.cmp(&a.0));
            let prefix = monomial_text(&key, &ref_names);
            let first = out.is_empty();
            if members.len() == 1 || prefix.is_empty() {
                for (k, (xy, c)) in members.iter().enumerate() {
                    let mono = format!("{prefix}{}", monomial_text(xy, &xy_names));
                    push_term(&mut out, first && k == 0, c, &mono);
                }
            } else {
                if !first {
                    out.push('+');
                }
                out.push_str(&prefix);
                out.push('(');
                let mut inner = String::new();
                for (k, (xy, c)) in members.iter().enumerate() {
                    push_term(&mut inner, k == 0, c, &monomial_text(xy, &xy_names));
                }
                out.push_str(&inner);
                out.push(')');
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Render an `ℓ = 0` polynomial with custom names for `x_0`, `x_1`,
    /// e.g. `["u", "v"]` for Molien series.
    pub fn render_named(&self, names: [&str; 2]) -> String {
        assert_eq!(self.ell, 0, "custom names only for two-variable polynomials");
        let names = [names[0].to_string(), names[1].to_string()];
        let mut rows: Vec<(&Exponents, &BigRational)> = self.terms.iter().collect();
        rows.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let mut out = String::new();
        for (k, (e, c)) in rows.iter().enumerate() {
            push_term(&mut out, k == 0, c, &monomial_text(e, &names));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parse text in either the styled or the raw naming scheme.
    pub fn parse(text: &str, ell: usize) -> Result<Self, PolyError> {
        let named = expr::parse(text).map_err(PolyError::Parse)?;
        let mut out = Self::zero(ell);
        for (mono, c) in named.0 {
            let mut e = vec![0; 1 << (ell + 1)];
            for (name, k) in mono {
                let i = VarId::resolve(&name, ell).ok_or(PolyError::UnknownVariable(name))?;
                e[i] += k;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Parse a two-variable polynomial with custom names.
    pub fn parse_named(text: &str, names: [&str; 2]) -> Result<Self, PolyError> {
        let named = expr::parse(text).map_err(PolyError::Parse)?;
        let mut out = Self::zero(0);
        for (mono, c) in named.0 {
            let mut e = vec![0; 2];
            for (name, k) in mono {
                let i = names.iter().position(|n| *n == name).ok_or(PolyError::UnknownVariable(name))?;
                e[i] += k;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

fn monomial_text(exps: &[u32], names: &[String]) -> String {
    let mut s = String::new();
    for (e, name) in exps.iter().zip(names) {
        match e {
            0 => {}
            1 => s.push_str(name),
            k => {
                s.push_str(name);
                s.push('^');
                s.push_str(&k.to_string());
            }
        }
    }
    s
}

fn push_term(out: &mut String, first: bool, c: &BigRational, mono: &str) {
    if c.is_negative() {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    let a = c.abs();
    if mono.is_empty() || !a.is_one() {
        out.push_str(&a.to_string());
    }
    out.push_str(mono);
}

/// Dimension of the rational span of a set of polynomials.
pub fn span_rank(polys: &[SparsePoly]) -> usize {
    let mut columns: BTreeMap<&Exponents, usize> = BTreeMap::new();
    for p in polys {
        for e in p.terms.keys() {
            let next = columns.len();
            columns.entry(e).or_insert(next);
        }
    }
    let mut rows: Vec<Vec<BigRational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![BigRational::zero(); columns.len()];
            for (e, c) in &p.terms {
                row[columns[e]] = c.clone();
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..columns.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot_row[col];
                for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *entry -= p * &factor;
                }
            }
        }
        rank += 1;
    }
    rank
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    /// Panics when the reference-slot counts differ; see [`SparsePoly::checked_add`].
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        self.scale(&-BigRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, ell: usize) -> SparsePoly {
        SparsePoly::parse(text, ell).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x+y", 0) * &p("x-y", 0), p("x^2-y^2", 0));
        assert_eq!(&p("x^2+3y^2", 0) + &SparsePoly::zero(0), p("x^2+3y^2", 0));
        assert_eq!(p("x^2+3y^2", 0).pow(2).render(Style::Styled), "x^4+6x^2y^2+9y^4");
        assert!(matches!(p("x", 0).checked_add(&p("w", 1)), Err(PolyError::ArityMismatch(0, 1))));
    }

    #[test]
    fn derivatives() {
        let w = p("x^4+8xy^3", 0);
        assert_eq!(w.partial_derivative(VarId::x0(0)), p("4x^3+8y^3", 0));
        assert!(p("x^4", 0).partial_derivative(VarId::x1(0)).is_zero());
    }

    #[test]
    fn substitutions() {
        let q = p("x^2+y^2", 0);
        let x = VarId::x0(0);
        let y = VarId::x1(0);
        let one = BigRational::one();
        let map = HashMap::from([
            (x, vec![(x, one.clone()), (y, one.clone())]),
            (y, vec![(x, one.clone()), (y, -one.clone())]),
        ]);
        assert_eq!(q.substitute_linear(&map).unwrap(), p("2x^2+2y^2", 0));

        let identity = HashMap::from([(x, vec![(x, one.clone())]), (y, vec![(y, one.clone())])]);
        assert_eq!(q.substitute_linear(&identity).unwrap(), q);

        // tetracode enumerator under the F_3 MacWilliams substitution
        let map = HashMap::from([
            (x, vec![(x, one.clone()), (y, rat(2))]),
            (y, vec![(x, one.clone()), (y, -one.clone())]),
        ]);
        let w = p("x^4+8xy^3", 0);
        let t = w.substitute_linear(&map).unwrap().scale(&BigRational::new(1.into(), 9.into()));
        assert_eq!(t, w);

        let partial = HashMap::from([(x, vec![(x, one)])]);
        assert!(matches!(q.substitute_linear(&partial), Err(PolyError::Unmapped(name)) if name == "y"));
    }

    #[test]
    fn homogeneous_parts() {
        let f = SparsePoly::parse_named("1+u+uv", ["u", "v"]).unwrap();
        assert_eq!(f.homogeneous_part(2).render_named(["u", "v"]), "uv");
        assert!(f.homogeneous_part(7).is_zero());
        assert_eq!(f.homogeneous_part(0).render_named(["u", "v"]), "1");
    }

    #[test]
    fn styled_rendering() {
        assert_eq!(p("6zxy^2 + w(x^3+2y^3)", 1).render(Style::Styled), "w(x^3+2y^3)+6zxy^2");
        assert_eq!(p("4z^2xy+w^2x^2+4wzy^2", 1).render(Style::Styled), "w^2x^2+4wzy^2+4z^2xy");
        assert_eq!(SparsePoly::zero(1).render(Style::Styled), "0");
        assert_eq!(p("x^4+8xy^3", 0).render(Style::Styled), "x^4+8xy^3");
        assert_eq!(p("-x+1/2y", 0).render(Style::Styled), "-x+1/2y");
        assert_eq!(p("w1z2x", 2).render(Style::Styled), "w1z2x");
        assert_eq!(p("x_{011}", 2).render(Style::Styled), "x_{011}");
    }

    #[test]
    fn raw_rendering() {
        let q = p("w(x^3+2y^3)+6zxy^2", 1);
        let raw = q.render(Style::Raw);
        assert_eq!(raw, "x_{00}^3x_{01}+6x_{00}x_{10}^2x_{11}+2x_{01}x_{10}^3");
        assert_eq!(SparsePoly::parse(&raw, 1).unwrap(), q);
    }

    #[test]
    fn variable_naming() {
        assert_eq!(VarId::w(1, 1).styled_name(), "w");
        assert_eq!(VarId::z(1, 1).styled_name(), "z");
        assert_eq!(VarId::w(3, 2).styled_name(), "w2");
        assert_eq!(VarId::z(3, 3).styled_name(), "z3");
        assert_eq!(VarId::from_bits(&[true, false]), VarId::x1(1));
        assert_eq!(VarId::from_bits(&[false, true]).styled_name(), "w");
        assert_eq!(VarId::from_bits(&[true, true, true]).raw_name(), "x_{111}");
        assert!(matches!(SparsePoly::parse("w", 0), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn rank_of_span() {
        let a = p("x^2+y^2", 0);
        let b = p("xy", 0);
        let c = &a + &b.scale(&rat(3));
        assert_eq!(span_rank(&[a.clone(), b.clone(), c]), 2);
        assert_eq!(span_rank(&[SparsePoly::zero(0)]), 0);
        assert_eq!(span_rank(&[a, b]), 2);
    }

    fn arb_poly(ell: usize) -> impl Strategy<Value = SparsePoly> {
        let width = 1usize << (ell + 1);
        prop::collection::vec((prop::collection::vec(0u32..3, width), -4i64..=4), 0..5).prop_map(move |terms| {
            let mut out = SparsePoly::zero(ell);
            for (e, c) in terms {
                out.add_term(e, rat(c));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(1), b in arb_poly(1), c in arb_poly(1)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn mixed_partials_commute(a in arb_poly(1)) {
            let (x, z) = (VarId::x0(1), VarId::z(1, 1));
            prop_assert_eq!(a.partial_derivative(x).partial_derivative(z), a.partial_derivative(z).partial_derivative(x));
        }

        #[test]
        fn substitution_is_multiplicative(a in arb_poly(0), b in arb_poly(0), k in 1i64..4) {
            let x = VarId::x0(0);
            let y = VarId::x1(0);
            let map = HashMap::from([
                (x, vec![(x, BigRational::one()), (y, rat(k))]),
                (y, vec![(x, BigRational::one()), (y, rat(-1))]),
            ]);
            let lhs = (&a * &b).substitute_linear(&map).unwrap();
            let rhs = &a.substitute_linear(&map).unwrap() * &b.substitute_linear(&map).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn render_then_parse_is_identity(a in arb_poly(2)) {
            for style in [Style::Styled, Style::Raw] {
                let text = a.render(style);
                let back = SparsePoly::parse(&text, 2).unwrap();
                prop_assert_eq!(back.render(style), text);
            }
        }
    }
}
