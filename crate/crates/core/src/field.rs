//! Finite fields `F_q = F_p[λ]/(F(λ))` in the power-basis representation.
//!
//! Every element is stored as its coefficient vector `(a_0, …, a_{f-1})` with
//! respect to `1, λ, …, λ^{f-1}`. Internally the same element is also
//! addressed by a compact [`Symbol`], the integer `a_0 + a_1 p + … + a_{f-1}
//! p^{f-1}`, and a [`FieldSpec`] carries full addition and multiplication
//! tables over symbols. Codes and enumerators work on symbols; the
//! [`FieldElement`] type is the checked, user-facing view.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::cyclo::CycloNumber;

/// Index of a field element: `a_0 + a_1 p + … + a_{f-1} p^{f-1}`.
pub type Symbol = u8;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(u64),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: u32, got: Vec<u32> },
    #[error("modulus {0:?} is reducible over the prime field")]
    Reducible(Vec<u32>),
    #[error("modulus {0:?} is irreducible but its root is not a primitive element")]
    NotPrimitive(Vec<u32>),
    #[error("elements belong to different fields")]
    Mismatch,
    #[error("vectors have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("Hermitian inner product needs an even extension degree (q = {0})")]
    HermitianOddDegree(u32),
    #[error("coefficient {value} out of range for p = {p}")]
    BadCoefficient { value: u32, p: u32 },
    #[error("invalid field description `{0}`")]
    Parse(String),
}

/// Which bilinear form defines orthogonality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerProduct {
    Euclidean,
    Hermitian,
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InnerProduct::Euclidean => f.write_str("euclidean"),
            InnerProduct::Hermitian => f.write_str("hermitian"),
        }
    }
}

impl FromStr for InnerProduct {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "euclidean" | "e" => Ok(InnerProduct::Euclidean),
            "hermitian" | "h" => Ok(InnerProduct::Hermitian),
            other => Err(FieldError::Parse(format!("inner product `{other}`"))),
        }
    }
}

/// `F_q` with `q = p^f`, defined by a monic irreducible modulus `F(x)` of degree `f`.
///
/// The default constructors insist that the root `λ` of `F` generates the
/// multiplicative group. [`FieldSpec::with_irreducible`] relaxes that to plain
/// irreducibility for callers who want a specific non-primitive modulus.
pub struct FieldSpec {
    p: u32,
    degree: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: bool,
    add: Vec<Symbol>,
    mul: Vec<Symbol>,
    neg: Vec<Symbol>,
    inv: Vec<Symbol>,
    conj: Option<Vec<Symbol>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}^{}", self.p, self.degree)?;
        if self.degree > 1 {
            let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
            write!(f, ";modulus={}", coeffs.join(","))?;
        }
        Ok(())
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Factor `q = p^f`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

// Dense polynomial helpers over F_p, coefficients low-to-high.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        let shift = top - dm;
        for (i, &mc) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mc % p) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, m, p)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small
    (1..p).find(|x| a * x % p == 1).unwrap_or(0)
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push((c % p as u64) as u32);
                c /= p as u64;
            }
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn root_order(modulus: &[u32], p: u32, q: u32) -> u32 {
    let lambda = poly_rem(&[0, 1], modulus, p);
    let mut acc = lambda.clone();
    let mut order = 1;
    while acc != [1] {
        acc = poly_mul_mod(&acc, &lambda, modulus, p);
        order += 1;
        if order > q {
            return 0;
        }
    }
    order
}

impl FieldSpec {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Arc<Self>, FieldError> {
        Self::default_for(p, 1)
    }

    /// `F_{p^f}` with a primitive modulus.
    ///
    /// `modulus` lists `c_0, …, c_f` low-to-high and must be monic.
    pub fn new(p: u32, degree: u32, modulus: Vec<u32>) -> Result<Arc<Self>, FieldError> {
        Self::build(p, degree, modulus, true)
    }

    /// Like [`FieldSpec::new`] but accepts any irreducible modulus.
    pub fn with_irreducible(p: u32, degree: u32, modulus: Vec<u32>) -> Result<Arc<Self>, FieldError> {
        Self::build(p, degree, modulus, false)
    }

    /// `F_{p^f}` with the pinned default modulus: `x - 0` style `x` for prime
    /// fields, otherwise the first primitive polynomial when monic candidates
    /// are ordered by the integer `c_0 + c_1 p + … + c_{f-1} p^{f-1}`.
    ///
    /// This gives `x^2+x+1` for `F_4` and `x^3+x+1` for `F_8`.
    pub fn default_for(p: u32, degree: u32) -> Result<Arc<Self>, FieldError> {
        check_params(p, degree)?;
        if degree == 1 {
            return Self::build(p, 1, vec![0, 1], false);
        }
        let count = (p as u64).pow(degree);
        for code in 1..count {
            let mut modulus = Vec::with_capacity(degree as usize + 1);
            let mut c = code;
            for _ in 0..degree {
                modulus.push((c % p as u64) as u32);
                c /= p as u64;
            }
            modulus.push(1);
            if modulus[0] == 0 || !is_irreducible(&modulus, p) {
                continue;
            }
            let q = p.pow(degree);
            if root_order(&modulus, p, q) == q - 1 {
                return Self::build(p, degree, modulus, true);
            }
        }
        unreachable!("every finite field has a primitive polynomial")
    }

    /// Default field of order `q`.
    pub fn of_order(q: u32) -> Result<Arc<Self>, FieldError> {
        let (p, f) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
        Self::default_for(p, f)
    }

    fn build(p: u32, degree: u32, modulus: Vec<u32>, require_primitive: bool) -> Result<Arc<Self>, FieldError> {
        check_params(p, degree)?;
        let q = p.pow(degree);
        if modulus.len() != degree as usize + 1 || modulus.last() != Some(&1) {
            return Err(FieldError::BadModulus { expected: degree, got: modulus });
        }
        if let Some(&value) = modulus.iter().find(|&&c| c >= p) {
            return Err(FieldError::BadCoefficient { value, p });
        }
        if !is_irreducible(&modulus, p) {
            return Err(FieldError::Reducible(modulus));
        }
        // For f = 1 the "root" of x - c is c itself; any prime field is fine.
        let primitive = degree == 1 || root_order(&modulus, p, q) == q - 1;
        if require_primitive && !primitive {
            return Err(FieldError::NotPrimitive(modulus));
        }

        let qs = q as usize;
        let to_vec = |s: usize| -> Vec<u32> {
            let mut v = Vec::with_capacity(degree as usize);
            let mut c = s as u32;
            for _ in 0..degree {
                v.push(c % p);
                c /= p;
            }
            v
        };
        let to_sym = |v: &[u32]| -> Symbol {
            v.iter().rev().fold(0u32, |acc, &c| acc * p + c) as Symbol
        };

        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..qs {
            let va = to_vec(a);
            for b in 0..qs {
                let vb = to_vec(b);
                let sum: Vec<u32> = va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = to_sym(&sum);
                let mut prod = poly_mul_mod(&poly_trim(va.clone()), &poly_trim(vb), &modulus, p);
                prod.resize(degree as usize, 0);
                mul[a * qs + b] = to_sym(&prod);
            }
        }
        let neg: Vec<Symbol> = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as Symbol)
            .collect();
        let inv: Vec<Symbol> = (0..qs)
            .map(|a| if a == 0 { 0 } else { (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as Symbol })
            .collect();
        let conj = degree.is_multiple_of(2).then(|| {
            let exp = p.pow(degree / 2);
            (0..qs)
                .map(|a| {
                    let mut acc: Symbol = 1;
                    for _ in 0..exp {
                        acc = mul[acc as usize * qs + a];
                    }
                    if a == 0 { 0 } else { acc }
                })
                .collect()
        });

        Ok(Arc::new(FieldSpec { p, degree, q, modulus, primitive, add, mul, neg, inv, conj }))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients `c_0, …, c_f` of the modulus.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Symbol) -> Symbol {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Symbol) -> Option<Symbol> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// `a^{√q}` when the degree is even, otherwise `a` unchanged.
    #[inline]
    pub fn conj(&self, a: Symbol) -> Symbol {
        match &self.conj {
            Some(table) => table[a as usize],
            None => a,
        }
    }

    pub fn has_conjugation(&self) -> bool {
        self.conj.is_some()
    }

    /// Basis coefficients of a symbol.
    pub fn coefficients(&self, a: Symbol) -> Vec<u32> {
        let mut c = a as u32;
        (0..self.degree)
            .map(|_| {
                let d = c % self.p;
                c /= self.p;
                d
            })
            .collect()
    }

    /// Symbol for the given basis coefficients.
    pub fn symbol(&self, coeffs: &[u32]) -> Result<Symbol, FieldError> {
        if coeffs.len() > self.degree as usize {
            return Err(FieldError::Parse(format!("{coeffs:?} has more than {} coefficients", self.degree)));
        }
        if let Some(&value) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(FieldError::BadCoefficient { value, p: self.p });
        }
        Ok(coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c) as Symbol)
    }

    /// Exponent `Σ a_i b_i mod p` such that `χ_b(a) = ζ_p^e`.
    pub fn character_exponent(&self, b: Symbol, a: Symbol) -> u32 {
        let (mut x, mut y) = (a as u32, b as u32);
        let mut e = 0;
        for _ in 0..self.degree {
            e += (x % self.p) * (y % self.p);
            x /= self.p;
            y /= self.p;
        }
        e % self.p
    }

    /// Inner product of two symbol vectors.
    pub fn inner_product(&self, u: &[Symbol], v: &[Symbol], mode: InnerProduct) -> Result<Symbol, FieldError> {
        if u.len() != v.len() {
            return Err(FieldError::LengthMismatch(u.len(), v.len()));
        }
        if mode == InnerProduct::Hermitian && !self.has_conjugation() {
            return Err(FieldError::HermitianOddDegree(self.q));
        }
        Ok(u.iter().zip(v).fold(0, |acc, (&a, &b)| {
            let b = if mode == InnerProduct::Hermitian { self.conj(b) } else { b };
            self.add(acc, self.mul(a, b))
        }))
    }

    /// Render a symbol in the file format: an integer for prime fields,
    /// dotted basis coefficients `a0.a1…` otherwise.
    pub fn format_symbol(&self, a: Symbol) -> String {
        if self.degree == 1 {
            a.to_string()
        } else {
            let parts: Vec<String> = self.coefficients(a).iter().map(|c| c.to_string()).collect();
            parts.join(".")
        }
    }

    /// Inverse of [`FieldSpec::format_symbol`].
    pub fn parse_symbol(&self, s: &str) -> Result<Symbol, FieldError> {
        let bad = || FieldError::Parse(format!("symbol `{s}`"));
        if self.degree == 1 {
            let v: u32 = s.parse().map_err(|_| bad())?;
            if v >= self.p {
                return Err(FieldError::BadCoefficient { value: v, p: self.p });
            }
            Ok(v as Symbol)
        } else {
            let coeffs: Vec<u32> = s.split('.').map(|c| c.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
            if coeffs.len() != self.degree as usize {
                return Err(bad());
            }
            self.symbol(&coeffs)
        }
    }

    /// Parse `q=<p>^<f>;modulus=<c0,…,cf>`; the modulus part is optional.
    /// `q=<q>` with a plain prime power is accepted too.
    pub fn parse(text: &str) -> Result<Arc<Self>, FieldError> {
        let bad = || FieldError::Parse(text.to_string());
        let mut order: Option<(u32, u32)> = None;
        let mut modulus: Option<Vec<u32>> = None;
        for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "q" => {
                    let value = value.trim();
                    order = Some(match value.split_once('^') {
                        Some((p, f)) => (p.trim().parse().map_err(|_| bad())?, f.trim().parse().map_err(|_| bad())?),
                        None => prime_power(value.parse().map_err(|_| bad())?).ok_or_else(bad)?,
                    });
                }
                "modulus" => {
                    modulus = Some(
                        value.split(',').map(|c| c.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?,
                    );
                }
                _ => return Err(bad()),
            }
        }
        let (p, f) = order.ok_or_else(bad)?;
        match modulus {
            Some(m) => Self::new(p, f, m),
            None => Self::default_for(p, f),
        }
    }
}

fn check_params(p: u32, degree: u32) -> Result<(), FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if degree == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let q = (p as u64).checked_pow(degree).unwrap_or(u64::MAX);
    if q > MAX_ORDER as u64 {
        return Err(FieldError::TooLarge(q));
    }
    Ok(())
}

/// Result of [`FieldElement::conjugate`]: over odd-degree fields there is no
/// order-two Frobenius and the element comes back unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conjugation {
    Frobenius(FieldElement),
    Identity(FieldElement),
}

impl Conjugation {
    pub fn into_inner(self) -> FieldElement {
        match self {
            Conjugation::Frobenius(e) | Conjugation::Identity(e) => e,
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Conjugation::Identity(_))
    }
}

/// An element of a specific field, `a_0 + a_1 λ + … + a_{f-1} λ^{f-1}`.
#[derive(Clone)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    symbol: Symbol,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({:?} in F_{})", self.coeffs(), self.spec.q)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.spec, &other.spec) && self.symbol == other.symbol
    }
}

impl Eq for FieldElement {}

fn same_field(a: &Arc<FieldSpec>, b: &Arc<FieldSpec>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FieldElement {
    pub fn new(spec: &Arc<FieldSpec>, coeffs: &[u32]) -> Result<Self, FieldError> {
        Ok(FieldElement { symbol: spec.symbol(coeffs)?, spec: Arc::clone(spec) })
    }

    pub fn from_symbol(spec: &Arc<FieldSpec>, symbol: Symbol) -> Self {
        assert!((symbol as u32) < spec.q, "symbol out of range");
        FieldElement { spec: Arc::clone(spec), symbol }
    }

    pub fn zero(spec: &Arc<FieldSpec>) -> Self {
        Self::from_symbol(spec, 0)
    }

    pub fn one(spec: &Arc<FieldSpec>) -> Self {
        Self::from_symbol(spec, 1)
    }

    /// The root `λ` of the modulus; for prime fields, the smallest primitive root.
    pub fn generator(spec: &Arc<FieldSpec>) -> Self {
        if spec.degree == 1 {
            let q = spec.q as Symbol;
            let root = (1..q)
                .find(|&g| {
                    let mut acc = g;
                    let mut order = 1;
                    while acc != 1 {
                        acc = spec.mul(acc, g);
                        order += 1;
                    }
                    order == spec.q - 1
                })
                .unwrap_or(1);
            Self::from_symbol(spec, root)
        } else {
            Self::from_symbol(spec, spec.p as Symbol)
        }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn symbol(&self) -> Symbol {
        self.symbol
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.spec.coefficients(self.symbol)
    }

    pub fn is_zero(&self) -> bool {
        self.symbol == 0
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if same_field(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(FieldError::Mismatch)
        }
    }

    fn with(&self, symbol: Symbol) -> Self {
        FieldElement { spec: Arc::clone(&self.spec), symbol }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.spec.add(self.symbol, other.symbol)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.spec.sub(self.symbol, other.symbol)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.spec.mul(self.symbol, other.symbol)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.spec.neg(self.symbol))
    }

    pub fn inv(&self) -> Option<Self> {
        self.spec.inv(self.symbol).map(|s| self.with(s))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.symbol;
        let mut acc: Symbol = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.spec.mul(acc, base);
            }
            base = self.spec.mul(base, base);
            e >>= 1;
        }
        self.with(acc)
    }

    /// `x ↦ x^{√q}`, the conjugation behind the Hermitian inner product.
    pub fn conjugate(&self) -> Conjugation {
        if self.spec.has_conjugation() {
            Conjugation::Frobenius(self.with(self.spec.conj(self.symbol)))
        } else {
            Conjugation::Identity(self.clone())
        }
    }

    /// The additive character `χ_b(a) = ζ_p^{a_0 b_0 + … + a_{f-1} b_{f-1}}`
    /// with `b = self`, as an element of `Q(ζ_p)`.
    pub fn chi(&self, a: &FieldElement) -> Result<CycloNumber, FieldError> {
        self.check(a)?;
        let e = self.spec.character_exponent(self.symbol, a.symbol);
        Ok(CycloNumber::zeta_power(self.spec.p, e as i64))
    }
}

/// `χ_b(a)` for field elements sharing a field.
pub fn char_chi(b: &FieldElement, a: &FieldElement) -> Result<CycloNumber, FieldError> {
    b.chi(a)
}

/// `Σ u_i v_i` or `Σ u_i conj(v_i)`.
pub fn inner_product(u: &[FieldElement], v: &[FieldElement], mode: InnerProduct) -> Result<FieldElement, FieldError> {
    if u.len() != v.len() {
        return Err(FieldError::LengthMismatch(u.len(), v.len()));
    }
    let Some(first) = u.first() else {
        return Err(FieldError::Parse("inner product of empty vectors has no field".into()));
    };
    let spec = first.spec();
    for x in u.iter().chain(v) {
        first.check(x)?;
    }
    let us: Vec<Symbol> = u.iter().map(FieldElement::symbol).collect();
    let vs: Vec<Symbol> = v.iter().map(FieldElement::symbol).collect();
    Ok(FieldElement::from_symbol(spec, spec.inner_product(&us, &vs, mode)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigRational, Zero};

    fn f4() -> Arc<FieldSpec> {
        FieldSpec::default_for(2, 2).unwrap()
    }

    #[test]
    fn default_moduli() {
        assert_eq!(f4().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::default_for(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        let f9 = FieldSpec::default_for(3, 2).unwrap();
        assert!(f9.is_primitive());
        assert_eq!(f9.modulus(), &[2, 1, 1]);
    }

    #[test]
    fn small_arithmetic() {
        let f3 = FieldSpec::prime(3).unwrap();
        let two = FieldElement::new(&f3, &[2]).unwrap();
        assert_eq!(two.add(&two).unwrap(), FieldElement::one(&f3));
        assert_eq!(two.mul(&two).unwrap(), FieldElement::one(&f3));

        let f = f4();
        let lambda = FieldElement::generator(&f);
        assert!(lambda.add(&lambda).unwrap().is_zero());
        assert_eq!(lambda.mul(&lambda).unwrap().coeffs(), vec![1, 1]);
        assert_eq!(lambda.mul(&FieldElement::one(&f)).unwrap(), lambda);
        assert_eq!(lambda.add(&FieldElement::zero(&f)).unwrap(), lambda);
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = FieldElement::one(&FieldSpec::prime(3).unwrap());
        let b = FieldElement::one(&FieldSpec::prime(5).unwrap());
        assert_eq!(a.add(&b), Err(FieldError::Mismatch));
        assert_eq!(a.mul(&b), Err(FieldError::Mismatch));
    }

    #[test]
    fn conjugation() {
        let f = f4();
        let lambda = FieldElement::generator(&f);
        let conj = lambda.conjugate();
        assert!(!conj.is_identity());
        assert_eq!(conj.into_inner().coeffs(), vec![1, 1]);
        assert_eq!(FieldElement::one(&f).conjugate().into_inner(), FieldElement::one(&f));

        // x^2 + 1 over F_3 is irreducible but λ has order 4, so only the
        // relaxed constructor takes it.
        assert!(matches!(FieldSpec::new(3, 2, vec![1, 0, 1]), Err(FieldError::NotPrimitive(_))));
        let f9 = FieldSpec::with_irreducible(3, 2, vec![1, 0, 1]).unwrap();
        let l = FieldElement::generator(&f9);
        let cubed = l.mul(&l).unwrap().mul(&l).unwrap();
        assert_eq!(l.conjugate().into_inner(), cubed);
        assert_eq!(cubed, l.neg());

        let f8 = FieldSpec::default_for(2, 3).unwrap();
        let g = FieldElement::generator(&f8);
        assert!(g.conjugate().is_identity());
    }

    #[test]
    fn inner_products() {
        let f3 = FieldSpec::prime(3).unwrap();
        let v = |xs: &[u32]| xs.iter().map(|&x| FieldElement::new(&f3, &[x]).unwrap()).collect::<Vec<_>>();
        let ip = inner_product(&v(&[1, 1, 1, 1]), &v(&[1, 2, 0, 0]), InnerProduct::Euclidean).unwrap();
        assert!(ip.is_zero());

        let f = f4();
        let one = FieldElement::one(&f);
        let lambda = FieldElement::generator(&f);
        let zero = FieldElement::zero(&f);
        let h = inner_product(&[one.clone(), one.clone()], &[one.clone(), one.clone()], InnerProduct::Hermitian).unwrap();
        assert!(h.is_zero());
        let h = inner_product(&[lambda.clone(), zero.clone()], &[lambda.clone(), zero], InnerProduct::Hermitian).unwrap();
        assert_eq!(h, one);

        assert!(matches!(
            inner_product(&v(&[1]), &v(&[1, 2]), InnerProduct::Euclidean),
            Err(FieldError::LengthMismatch(1, 2))
        ));
        assert!(matches!(
            inner_product(&v(&[1]), &v(&[1]), InnerProduct::Hermitian),
            Err(FieldError::HermitianOddDegree(3))
        ));
    }

    #[test]
    fn characters() {
        let f3 = FieldSpec::prime(3).unwrap();
        let one = FieldElement::one(&f3);
        assert_eq!(one.chi(&one).unwrap(), CycloNumber::zeta(3));
        let zero = FieldElement::zero(&f3);
        assert_eq!(zero.chi(&one).unwrap(), CycloNumber::one(3));

        let f = f4();
        let one = FieldElement::one(&f);
        let mut sum = CycloNumber::zero(2);
        for s in 0..4 {
            let b = FieldElement::from_symbol(&f, s);
            sum = &sum + &one.chi(&b.mul(&one).unwrap()).unwrap();
        }
        assert!(sum.is_zero());
    }

    #[test]
    fn parse_field_strings() {
        let f = FieldSpec::parse("q=2^2;modulus=1,1,1").unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(FieldSpec::parse("q=3^1").unwrap().order(), 3);
        assert_eq!(FieldSpec::parse("q=9").unwrap().degree(), 2);
        assert!(FieldSpec::parse("q=6").is_err());
        assert!(matches!(FieldSpec::parse("q=2^2;modulus=1,0,1"), Err(FieldError::Reducible(_))));
        assert_eq!(f.to_string(), "q=2^2;modulus=1,1,1");
    }

    #[test]
    fn symbols_round_trip() {
        let f = FieldSpec::default_for(3, 2).unwrap();
        for s in 0..9 {
            assert_eq!(f.parse_symbol(&f.format_symbol(s)).unwrap(), s);
        }
        assert!(f.parse_symbol("3.0").is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, d) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)] {
            let f = FieldSpec::default_for(p, d).unwrap();
            let q = f.order() as Symbol;
            for a in 0..q {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_is_involutive_automorphism() {
        for (p, d) in [(2, 2), (3, 2), (2, 4)] {
            let f = FieldSpec::default_for(p, d).unwrap();
            let q = f.order() as Symbol;
            let sub = (p as u64).pow(d / 2);
            for a in 0..q {
                assert_eq!(f.conj(f.conj(a)), a);
                let e = FieldElement::from_symbol(&f, a);
                // fixed points are exactly the subfield of order √q
                let fixed = f.conj(a) == a;
                assert_eq!(fixed, e.pow(sub) == e);
                for b in 0..q {
                    assert_eq!(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)));
                    assert_eq!(f.conj(f.add(a, b)), f.add(f.conj(a), f.conj(b)));
                }
            }
            assert_eq!((0..q).filter(|&a| f.conj(a) == a).count() as u64, sub);
        }
    }

    #[test]
    fn character_orthogonality() {
        for q in [2u32, 3, 4, 5, 8, 9] {
            let f = FieldSpec::of_order(q).unwrap();
            let chi = FieldElement::one(&f);
            for a in 0..q as Symbol {
                let mut sum = CycloNumber::zero(f.characteristic());
                for b in 0..q as Symbol {
                    let ab = FieldElement::from_symbol(&f, f.mul(a, b));
                    sum = &sum + &chi.chi(&ab).unwrap();
                }
                let expected = if a == 0 { BigRational::from_integer(q.into()) } else { BigRational::zero() };
                assert_eq!(sum, CycloNumber::from_rational(f.characteristic(), expected));
            }
        }
    }
}
