//! Exact arithmetic in the cyclotomic-rational field Q(zeta_N).
//!
//! Every scalar in the library is a `CycScalar`: a polynomial in the
//! primitive N-th root of unity `zeta_N`, with rational coefficients,
//! kept in the unique reduced form modulo the N-th cyclotomic polynomial
//! Phi_N. For N = 1 this degenerates to plain rationals.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always reduced, denominator positive.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid scalar literal at byte {pos}: {msg}")]
    Literal { pos: usize, msg: String },
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Exact division of integer polynomials, ascending coefficients.
/// The divisor must be monic and the division must be exact.
fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for qi in (0..=qn).rev() {
        let lead = rem[qi + dn].clone();
        if !lead.is_zero() {
            for (k, dc) in den.iter().enumerate() {
                rem[qi + k] -= &lead * dc;
            }
        }
        quot[qi] = lead;
    }
    assert!(rem.iter().all(Zero::is_zero), "polynomial division not exact");
    quot
}

/// The N-th cyclotomic polynomial Phi_N, ascending integer coefficients,
/// computed by dividing x^N - 1 by Phi_d for every proper divisor d.
/// Cached process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    assert!(n > 0, "cyclotomic order must be positive");
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        let mut xn1 = vec![BigInt::zero(); n as usize + 1];
        xn1[0] = BigInt::from(-1);
        xn1[n as usize] = BigInt::one();
        let mut result = xn1;
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_polynomial(d);
            result = poly_exact_div(&result, &phi_d);
        }
        result
    };
    debug_assert_eq!(poly.len() as u64, euler_phi(n) + 1);
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// An element of Q(zeta_N), stored as `coeffs[i] * zeta_N^i` for
/// `i < phi(N)`, reduced modulo Phi_N.
#[derive(Clone, PartialEq, Eq)]
pub struct CycScalar {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn zero(order: u64) -> Self {
        let phi = euler_phi(order) as usize;
        CycScalar {
            order,
            coeffs: vec![Rational::zero(); phi],
        }
    }

    pub fn one(order: u64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_rational(order: u64, value: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn from_integer(order: u64, value: i64) -> Self {
        Self::from_rational(order, Rational::from(BigInt::from(value)))
    }

    /// zeta_N^(k mod N), in reduced form.
    pub fn root_of_unity(order: u64, k: i64) -> Self {
        let n = order as i64;
        let e = k.rem_euclid(n) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::reduce(order, raw)
    }

    /// zeta_N^(k mod N) for arbitrary-precision exponents.
    pub fn root_of_unity_big(order: u64, k: &BigInt) -> Self {
        let n = BigInt::from(order);
        let e = k.mod_floor_euclid(&n);
        Self::root_of_unity(order, e)
    }

    fn reduce(order: u64, mut raw: Vec<Rational>) -> Self {
        let phi = euler_phi(order) as usize;
        let modulus = cyclotomic_polynomial(order);
        while raw.len() > phi {
            let lead = raw.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let deg = raw.len(); // degree of the popped term
            let shift = deg - phi;
            for (i, c) in modulus.iter().take(phi).enumerate() {
                let delta = &lead * Rational::from(c.clone());
                raw[shift + i] -= delta;
            }
        }
        raw.resize(phi, Rational::zero());
        CycScalar { order, coeffs: raw }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), ScalarError> {
        if self.order != other.order {
            return Err(ScalarError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycScalar {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycScalar {
            order: self.order,
            coeffs,
        })
    }

    pub fn negate(&self) -> Self {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        if n == 0 {
            return Ok(self.clone());
        }
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Ok(Self::reduce(self.order, raw))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm
    /// against Phi_N (irreducible over Q, so any nonzero element is a unit).
    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect();
        let (g, s) = poly_ext_gcd(&self.coeffs, &modulus);
        // g is a nonzero constant (Phi_N irreducible); normalize s by it.
        debug_assert_eq!(poly_degree(&g), Some(0));
        let g0 = g[0].clone();
        let inv_raw: Vec<Rational> = s.iter().map(|c| c / &g0).collect();
        Ok(Self::reduce(self.order, inv_raw))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut acc = CycScalar::one(self.order);
        for _ in 0..exp {
            acc = acc.checked_mul(self).unwrap();
        }
        acc
    }
}

trait ModFloor {
    fn mod_floor_euclid(&self, m: &BigInt) -> i64;
}

impl ModFloor for BigInt {
    fn mod_floor_euclid(&self, m: &BigInt) -> i64 {
        use num_integer::Integer;
        let r = self.mod_floor(m);
        // r is in [0, m), and m fits in u64, so this cannot overflow.
        i64::try_from(r).expect("reduced exponent fits in i64")
    }
}

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().map(Zero::is_zero).unwrap_or(false) {
        p.pop();
    }
    p
}

/// Remainder and quotient of a / b over Q[x], ascending coefficients.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let mut rem = a.to_vec();
    let mut quot = vec![Rational::zero(); a.len().saturating_sub(db)];
    loop {
        let dr = match poly_degree(&rem) {
            Some(d) if d >= db => d,
            _ => break,
        };
        let factor = &rem[dr] / &b[db];
        let shift = dr - db;
        for i in 0..=db {
            let delta = &factor * &b[i];
            rem[shift + i] -= delta;
        }
        quot[shift] = factor;
    }
    (quot, poly_trim(rem))
}

/// Returns (g, s) with g = gcd(a, m) and s*a = g (mod m).
fn poly_ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = poly_trim(m.to_vec());
    let mut r1 = poly_trim(a.to_vec());
    let mut s0: Vec<Rational> = vec![];
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let qs = poly_mul(&q, &s1);
        let s = poly_sub(&s0, &qs);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(out)
}

macro_rules! panicking_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                self.$checked(rhs).expect("scalar order mismatch")
            }
        }
    };
}

panicking_binop!(Add, add, checked_add);
panicking_binop!(Sub, sub, checked_sub);
panicking_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        self.negate()
    }
}

// ---------------------------------------------------------------------------
// Literal grammar: a scalar is a sum of terms `c` or `c*z^k`, where `c` is
// `int` or `int/int` and `z` denotes zeta_N. Emission is canonical; parsing
// additionally accepts bare `z`, `z^k` and `c*z`.
// ---------------------------------------------------------------------------

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*z^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar(N={}, {})", self.order, self)
    }
}

struct LiteralParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> LiteralParser<'a> {
    fn new(s: &'a str) -> Self {
        LiteralParser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Literal {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn parse_int(&mut self) -> Result<BigInt, ScalarError> {
        let neg = if self.peek() == Some(b'-') {
            self.bump();
            true
        } else {
            if self.peek() == Some(b'+') {
                self.bump();
            }
            false
        };
        let mag = self.parse_uint()?;
        Ok(if neg { -mag } else { mag })
    }

    /// One term: contributes (coefficient, power-of-z).
    fn parse_term(&mut self) -> Result<(Rational, i64), ScalarError> {
        if self.peek() == Some(b'z') {
            self.bump();
            let k = self.parse_exponent()?;
            return Ok((Rational::one(), k));
        }
        let numer = self.parse_int()?;
        let coeff = if self.peek() == Some(b'/') {
            self.bump();
            let denom = self.parse_int()?;
            if denom.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Rational::new(numer, denom)
        } else {
            Rational::from(numer)
        };
        if self.peek() == Some(b'*') {
            self.bump();
            if self.peek() != Some(b'z') {
                return Err(self.err("expected z after *"));
            }
            self.bump();
            let k = self.parse_exponent()?;
            Ok((coeff, k))
        } else {
            Ok((coeff, 0))
        }
    }

    fn parse_exponent(&mut self) -> Result<i64, ScalarError> {
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.parse_int()?;
            i64::try_from(e).map_err(|_| self.err("exponent out of range"))
        } else {
            Ok(1)
        }
    }
}

/// Parse a scalar literal relative to the field Q(zeta_N).
pub fn parse_scalar(order: u64, text: &str) -> Result<CycScalar, ScalarError> {
    let mut p = LiteralParser::new(text);
    let mut acc = CycScalar::zero(order);
    let mut first = true;
    loop {
        let sign = match p.peek() {
            None if first => return Err(p.err("empty scalar literal")),
            None => break,
            Some(b'+') => {
                p.bump();
                false
            }
            Some(b'-') => {
                p.bump();
                true
            }
            Some(_) if first => false,
            Some(_) => return Err(p.err("expected + or - between terms")),
        };
        let (coeff, k) = p.parse_term()?;
        let coeff = if sign { -coeff } else { coeff };
        let term = CycScalar::from_rational(order, coeff)
            .checked_mul(&CycScalar::root_of_unity(order, k))?;
        acc = acc.checked_add(&term)?;
        first = false;
    }
    Ok(acc)
}
