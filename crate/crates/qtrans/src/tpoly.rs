//! Polynomials in the parameter t with arbitrary-precision integer coefficients.
//!
//! Provides the dense coefficient representation used for every matrix entry
//! and expansion coefficient in this crate, together with exact division,
//! parsing, paper-style text rendering, and a JSON encoding as an ascending
//! coefficient array.

use crate::error::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Dense polynomial in t over the integers.
///
/// `coeffs[d]` is the coefficient of `t^d`. The vector never ends in a zero;
/// the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(1)
    }

    /// The polynomial t.
    pub fn t() -> Self {
        TPoly::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        TPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// `c * t^d`.
    pub fn monomial(c: i64, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::from(c);
        TPoly::from_coeffs(coeffs)
    }

    /// `1 - t^d` for d >= 1, the building block of the b and phi scalars.
    pub fn one_minus_t_pow(d: usize) -> Self {
        assert!(d >= 1);
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::one();
        coeffs[d] = -BigInt::one();
        TPoly::from_coeffs(coeffs)
    }

    /// Builds from an ascending coefficient list, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// Ascending coefficients; empty exactly for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^d`, zero beyond the degree.
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Value at t = 0.
    pub fn at_zero(&self) -> BigInt {
        self.coeff(0)
    }

    /// Value at t = 1.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Substitutes t = 0 or t = 1, the two specializations used in identity checks.
    pub fn specialize01(&self, t0: u8) -> Result<BigInt, Error> {
        match t0 {
            0 => Ok(self.at_zero()),
            1 => Ok(self.at_one()),
            _ => Err(Error::Invalid(format!(
                "specialization point must be 0 or 1, got {t0}"
            ))),
        }
    }

    pub fn pow(&self, e: usize) -> TPoly {
        let mut acc = TPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder, or None when a leading coefficient fails to
    /// divide over the integers. The remainder has degree below the divisor's.
    pub fn div_rem(&self, divisor: &TPoly) -> Option<(TPoly, TPoly)> {
        if divisor.is_zero() {
            return None;
        }
        let dd = divisor.degree().unwrap();
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((TPoly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return None;
            }
            let q = &top / lead;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let v = &rem[k + i] - &(q.clone() * dc);
                rem[k + i] = v;
            }
            quot[k] = q;
        }
        Some((TPoly::from_coeffs(quot), TPoly::from_coeffs(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &TPoly) -> Result<TPoly, Error> {
        match self.div_rem(divisor) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::Internal(format!(
                "inexact polynomial division: ({self}) / ({divisor})"
            ))),
        }
    }

    /// Parses expressions like `-t^4 + t^3 + t^2 - t`, `3 - 5t + t^2`,
    /// `(1+t)(1+t^2)(1+t^3)`, or `t^2(1+t)^2`. Juxtaposition multiplies.
    pub fn parse(input: &str) -> Result<TPoly, Error> {
        let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0usize;
        let p = parse_expr(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!(
                "unexpected character '{}' at offset {pos} in polynomial \"{input}\"",
                chars[pos]
            )));
        }
        Ok(p)
    }

    /// Renders for LaTeX output: `-t^{4} + t^{3} + t^{2} - t`.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            if d == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                if d == 1 {
                    out.push('t');
                } else {
                    out.push_str(&format!("t^{{{d}}}"));
                }
            }
        }
        out
    }
}

fn parse_expr(s: &[char], pos: &mut usize) -> Result<TPoly, Error> {
    let mut acc = TPoly::zero();
    let mut sign = 1i64;
    if s.get(*pos) == Some(&'+') {
        *pos += 1;
    } else if s.get(*pos) == Some(&'-') {
        sign = -1;
        *pos += 1;
    }
    loop {
        let term = parse_term(s, pos)?;
        if sign == 1 {
            acc += &term;
        } else {
            acc -= &term;
        }
        match s.get(*pos) {
            Some('+') => {
                sign = 1;
                *pos += 1;
            }
            Some('-') => {
                sign = -1;
                *pos += 1;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_term(s: &[char], pos: &mut usize) -> Result<TPoly, Error> {
    let mut acc = parse_factor(s, pos)?;
    loop {
        match s.get(*pos) {
            Some('*') => {
                *pos += 1;
                acc = &acc * &parse_factor(s, pos)?;
            }
            Some(c) if *c == '(' || *c == 't' || c.is_ascii_digit() => {
                acc = &acc * &parse_factor(s, pos)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_factor(s: &[char], pos: &mut usize) -> Result<TPoly, Error> {
    let atom = parse_atom(s, pos)?;
    if s.get(*pos) == Some(&'^') {
        *pos += 1;
        let start = *pos;
        while s.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
            *pos += 1;
        }
        if *pos == start {
            return Err(Error::Parse("exponent expected after '^'".into()));
        }
        let e: usize = s[start..*pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse("exponent out of range".into()))?;
        return Ok(atom.pow(e));
    }
    Ok(atom)
}

fn parse_atom(s: &[char], pos: &mut usize) -> Result<TPoly, Error> {
    match s.get(*pos) {
        Some('(') => {
            *pos += 1;
            let inner = parse_expr(s, pos)?;
            if s.get(*pos) != Some(&')') {
                return Err(Error::Parse("missing closing parenthesis".into()));
            }
            *pos += 1;
            Ok(inner)
        }
        Some('t') => {
            *pos += 1;
            Ok(TPoly::t())
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while s.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let digits: String = s[start..*pos].iter().collect();
            let v = digits
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer \"{digits}\"")))?;
            Ok(TPoly::from_coeffs(vec![v]))
        }
        Some(c) => Err(Error::Parse(format!("unexpected character '{c}'"))),
        None => Err(Error::Parse("unexpected end of polynomial".into())),
    }
}

impl fmt::Display for TPoly {
    /// Descending powers, e.g. `-t^4 + t^3 + t^2 - t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
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
            let mag = c.abs();
            if d == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if d == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{d}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            // Plain JSON integer when it fits; decimal string beyond i128 so
            // no value can be truncated.
            match i128::try_from(c) {
                Ok(v) => seq.serialize_element(&v)?,
                Err(_) => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// One coefficient: a JSON integer, or a decimal string for values past i128.
struct Coeff(BigInt);

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coeff;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Coeff, E> {
                Ok(Coeff(BigInt::from(v)))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Coeff, E> {
                Ok(Coeff(BigInt::from(v)))
            }
            fn visit_i128<E: serde::de::Error>(self, v: i128) -> Result<Coeff, E> {
                Ok(Coeff(BigInt::from(v)))
            }
            fn visit_u128<E: serde::de::Error>(self, v: u128) -> Result<Coeff, E> {
                Ok(Coeff(BigInt::from(v)))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Coeff, E> {
                v.parse::<BigInt>()
                    .map(Coeff)
                    .map_err(|_| E::custom(format!("bad integer string \"{v}\"")))
            }
        }
        deserializer.deserialize_any(V)
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffSeq;
        impl<'de> Visitor<'de> for CoeffSeq {
            type Value = TPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of integer coefficients")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<TPoly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element::<Coeff>()? {
                    coeffs.push(c.0);
                }
                Ok(TPoly::from_coeffs(coeffs))
            }
        }
        deserializer.deserialize_seq(CoeffSeq)
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly {
                $trait::$m(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&TPoly> for TPoly {
    fn mul_assign(&mut self, rhs: &TPoly) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> TPoly {
        TPoly::parse(s).unwrap()
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        let q = TPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(0), BigInt::from(0)]);
        assert_eq!(q.coeffs().len(), 1);
        assert!(TPoly::from_coeffs(vec![BigInt::zero()]).is_zero());
        assert_eq!(TPoly::zero().degree(), None);
    }

    #[test]
    fn products_match_hand_expansion() {
        assert_eq!(p("1-t") * p("1+t"), p("1-t^2"));
        // (t^2 - t)(1 - t) + (t^3 - t^2)(1 - t) collapses to a single quartic.
        let sum = &(&p("t^2-t") * &p("1-t")) + &(&p("t^3-t^2") * &p("1-t"));
        assert_eq!(sum, p("-t^4 + t^3 + t^2 - t"));
        assert!((&TPoly::zero() * &p("1+t")).is_zero());
        assert_eq!(p("(1+t)(1+t^2)"), p("1 + t + t^2 + t^3"));
    }

    #[test]
    fn evaluation() {
        let q = p("1 + t + t^2");
        assert_eq!(q.eval(&BigInt::from(2)), BigInt::from(7));
        assert_eq!(q.at_zero(), BigInt::from(1));
        assert_eq!(q.at_one(), BigInt::from(3));
        assert_eq!(q.specialize01(0).unwrap(), BigInt::from(1));
        assert_eq!(q.specialize01(1).unwrap(), BigInt::from(3));
        assert!(q.specialize01(2).is_err());
    }

    #[test]
    fn display_style() {
        assert_eq!(p("-t^4 + t^3 + t^2 - t").to_string(), "-t^4 + t^3 + t^2 - t");
        assert_eq!(TPoly::zero().to_string(), "0");
        assert_eq!(TPoly::one().to_string(), "1");
        assert_eq!(p("1-t").to_string(), "-t + 1");
        assert_eq!(p("3-5t+t^2+t^3").to_string(), "t^3 + t^2 - 5t + 3");
        assert_eq!(p("2t^3").to_string(), "2t^3");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("t^2(1+t)^2"), p("t^2 + 2t^3 + t^4"));
        assert_eq!(p("2(1-t)"), p("2 - 2t"));
        assert_eq!(p("(1+t)(1+t^2)(1+t^3)"), p("1+t+t^2+2t^3+t^4+t^5+t^6"));
        assert!(TPoly::parse("t^").is_err());
        assert!(TPoly::parse("(1+t").is_err());
        assert!(TPoly::parse("x").is_err());
        assert!(TPoly::parse("").is_err());
        assert!(TPoly::parse("1+t)").is_err());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("1-t^2").exact_div(&p("1-t")).unwrap(), p("1+t"));
        assert!(p("1+t^2").exact_div(&p("1-t")).is_err());
        assert!(p("1").exact_div(&TPoly::zero()).is_err());
        // [3]!_t = (1)(1+t)(1+t+t^2) divides the length-3 staircase product.
        let fact3 = p("(1+t)(1+t+t^2)");
        let prod = &fact3 * &p("1 - t + t^5");
        assert_eq!(prod.exact_div(&fact3).unwrap(), p("1 - t + t^5"));
    }

    #[test]
    fn json_round_trip() {
        let q = p("-t^4 + t^3 + t^2 - t");
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, "[0,-1,1,1,-1]");
        assert_eq!(serde_json::from_str::<TPoly>(&js).unwrap(), q);

        // A coefficient beyond i128 survives via the string fallback.
        let big = BigInt::from(2).pow(200);
        let h = TPoly::from_coeffs(vec![big.clone(), BigInt::one()]);
        let js = serde_json::to_string(&h).unwrap();
        assert!(js.contains('"'));
        assert_eq!(serde_json::from_str::<TPoly>(&js).unwrap(), h);
    }

    fn arb_tpoly() -> impl Strategy<Value = TPoly> {
        prop::collection::vec(-9i64..=9, 0..6)
            .prop_map(|v| TPoly::from_coeffs(v.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_tpoly(), b in arb_tpoly(), c in arb_tpoly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &TPoly::zero(), a.clone());
            prop_assert_eq!(&a * &TPoly::one(), a.clone());
        }

        #[test]
        fn degree_of_product_adds(a in arb_tpoly(), b in arb_tpoly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(
                (&a * &b).degree().unwrap(),
                a.degree().unwrap() + b.degree().unwrap()
            );
        }

        #[test]
        fn division_inverts_multiplication(a in arb_tpoly(), b in arb_tpoly()) {
            prop_assume!(!b.is_zero());
            let q = (&a * &b).exact_div(&b).unwrap();
            prop_assert_eq!(q, a);
        }

        #[test]
        fn serde_round_trip(a in arb_tpoly()) {
            let js = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<TPoly>(&js).unwrap(), a);
        }

        #[test]
        fn display_parse_round_trip(a in arb_tpoly()) {
            prop_assert_eq!(TPoly::parse(&a.to_string()).unwrap(), a);
        }
    }
}
