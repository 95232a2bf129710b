//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element is a rational vector of length `φ(N)` in the basis
//! `1, ζ, …, ζ^{φ(N)-1}`, always reduced modulo the `N`-th cyclotomic
//! polynomial `Φ_N`. Mixed-conductor operations lift both operands to the
//! least common multiple first. There is deliberately no general inversion;
//! division is only by nonzero rationals.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Integer coefficients of `Φ_n`, low-to-high.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    cached_phi(n).to_vec()
}

fn cached_phi(n: u32) -> Arc<[i64]> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_div(&num, &cached_phi(d));
    }
    let phi: Arc<[i64]> = num.into();
    cache.lock().unwrap().insert(n, Arc::clone(&phi));
    phi
}

// Division of integer polynomials by a monic divisor, remainder must vanish.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// An element of `Q(ζ_N)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNumber {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber({self})")
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl CycloNumber {
    pub fn zero(conductor: u32) -> Self {
        let phi = totient(conductor) as usize;
        CycloNumber { conductor, coeffs: vec![BigRational::zero(); phi] }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, BigRational::one())
    }

    pub fn from_rational(conductor: u32, r: BigRational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(conductor: u32, n: i64) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(BigInt::from(n)))
    }

    /// `ζ_N` itself.
    pub fn zeta(conductor: u32) -> Self {
        Self::zeta_power(conductor, 1)
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn zeta_power(conductor: u32, k: i64) -> Self {
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Self::reduce(conductor, raw)
    }

    /// Build from an arbitrary-length coefficient vector in powers of `ζ_N`.
    pub fn from_powers(conductor: u32, coeffs: Vec<BigRational>) -> Self {
        // fold exponents mod N first, then reduce mod Φ_N
        let n = conductor as usize;
        let mut folded = vec![BigRational::zero(); n.max(1)];
        for (k, c) in coeffs.into_iter().enumerate() {
            folded[k % n] += c;
        }
        Self::reduce(conductor, folded)
    }

    fn reduce(conductor: u32, mut raw: Vec<BigRational>) -> Self {
        let phi = cached_phi(conductor);
        let deg = phi.len() - 1;
        while raw.len() > deg {
            let top = raw.len() - 1;
            let c = raw.pop().unwrap();
            if !c.is_zero() {
                let shift = top - deg;
                for (j, &pc) in phi[..deg].iter().enumerate() {
                    raw[shift + j] -= &c * BigRational::from_integer(pc.into());
                }
            }
        }
        raw.resize(deg, BigRational::zero());
        CycloNumber { conductor, coeffs: raw }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients in the basis `1, ζ, …, ζ^{φ(N)-1}`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Re-express in `Q(ζ_M)`; `M` must be a multiple of the conductor.
    pub fn lift(&self, target: u32) -> Self {
        assert!(target.is_multiple_of(self.conductor), "cannot lift conductor {} to {}", self.conductor, target);
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Self::reduce(target, raw)
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else {
            let m = a.conductor.lcm(&b.conductor);
            (a.lift(m), b.lift(m))
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloNumber { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Division by a nonzero rational.
    pub fn div_rational(&self, r: &BigRational) -> Self {
        assert!(!r.is_zero(), "division by zero");
        self.scale(&r.recip())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact equality across conductors.
    pub fn equals(&self, other: &Self) -> bool {
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

/// `1/√3 = (ζ_12 + ζ_12^{-1})/3` in `Q(ζ_12)`.
pub fn sqrt3_inverse() -> CycloNumber {
    sqrt3().div_rational(&BigRational::from_integer(3.into()))
}

/// `√3 = ζ_12 + ζ_12^{-1}`.
pub fn sqrt3() -> CycloNumber {
    &CycloNumber::zeta_power(12, 1) + &CycloNumber::zeta_power(12, -1)
}

impl Add for &CycloNumber {
    type Output = CycloNumber;

    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = CycloNumber::aligned(self, rhs);
        CycloNumber { conductor: a.conductor, coeffs: a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect() }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;

    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;

    fn neg(self) -> CycloNumber {
        CycloNumber { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;

    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = CycloNumber::aligned(self, rhs);
        let len = a.coeffs.len() + b.coeffs.len();
        let mut raw = vec![BigRational::zero(); len.saturating_sub(1).max(1)];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        CycloNumber::reduce(a.conductor, raw)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNumber {
    type Output = CycloNumber;

    fn neg(self) -> CycloNumber {
        -&self
    }
}
