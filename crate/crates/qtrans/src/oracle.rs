//! Brute-force verification backend: exact multivariate polynomials with
//! coefficients in Z[t], the raw symmetrization definition of the
//! Hall-Littlewood P functions, honest rendering of formal quasisymmetric
//! expansions, and monomial extraction back out of a polynomial. Everything
//! here recomputes values from first principles so the combinatorial
//! constructions elsewhere can be checked against an independent route.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::indexset::{compositions_of, Partition};
use crate::tpoly::TPoly;
use crate::transition::Basis;

/// Hard ceiling on the number of variables: the permutation sum grows as N!.
pub const ORACLE_MAX_VARS: usize = 5;
/// Hard ceiling on the degree handled by the raw definition.
pub const ORACLE_MAX_DEGREE: usize = 4;

/// A polynomial in a fixed number of variables with coefficients in Z[t].
/// Terms map the exponent vector to its coefficient; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, TPoly>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: TPoly) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, TPoly::one())
    }

    /// The single variable x_i (1-indexed).
    pub fn x(nvars: usize, i: usize) -> Self {
        MPoly::from_monomial(nvars, &[(i, 1)], TPoly::one())
    }

    /// A monomial given as (variable, exponent) pairs, 1-indexed variables.
    pub fn from_monomial(nvars: usize, powers: &[(usize, u32)], coeff: TPoly) -> Self {
        let mut exps = vec![0u32; nvars];
        for &(i, e) in powers {
            assert!(i >= 1 && i <= nvars, "variable index out of range");
            exps[i - 1] += e;
        }
        let mut p = MPoly::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &TPoly)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> TPoly {
        self.terms.get(exps).cloned().unwrap_or_else(TPoly::zero)
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: TPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.scale(&TPoly::constant(-1)))
    }

    pub fn scale(&self, c: &TPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        out
    }

    /// Exact division by (x_i - x_j), 1-indexed, by synthetic division along
    /// x_i. Errors if the remainder is nonzero.
    pub fn div_exact_linear(&self, i: usize, j: usize) -> Result<MPoly> {
        assert!(i != j && i >= 1 && i <= self.nvars && j >= 1 && j <= self.nvars);
        let (i, j) = (i - 1, j - 1);
        // Group by the exponent of x_i.
        let mut by_deg: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e[i];
            let mut rest = e.clone();
            rest[i] = 0;
            by_deg
                .entry(d)
                .or_insert_with(|| MPoly::zero(self.nvars))
                .insert_term(rest, c.clone());
        }
        let top = by_deg.keys().next_back().copied().unwrap_or(0);
        let mut quotient = MPoly::zero(self.nvars);
        // Horner walk from the top degree: each step produces the quotient
        // coefficient one degree down and carries an x_j multiple along.
        let mut carry = MPoly::zero(self.nvars);
        for d in (1..=top).rev() {
            let c_d = by_deg.remove(&d).unwrap_or_else(|| MPoly::zero(self.nvars));
            let q = c_d.add(&carry);
            for (e, c) in &q.terms {
                let mut exps = e.clone();
                exps[i] += d - 1;
                quotient.insert_term(exps, c.clone());
            }
            carry = q.mul(&MPoly::x(self.nvars, j + 1));
        }
        let c_0 = by_deg.remove(&0).unwrap_or_else(|| MPoly::zero(self.nvars));
        let remainder = c_0.add(&carry);
        if !remainder.is_zero() {
            return Err(Error::Internal(format!(
                "inexact division by (x{} - x{})",
                i + 1,
                j + 1
            )));
        }
        Ok(quotient)
    }

    /// Divides every coefficient by the same polynomial, exactly.
    pub fn div_exact_coeff(&self, d: &TPoly) -> Result<MPoly> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.exact_div(d)?);
        }
        Ok(out)
    }

    /// Evaluates the t parameter at zero, dropping vanished terms.
    pub fn at_zero(&self) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), TPoly::from_coeffs(vec![c.at_zero()]));
        }
        out
    }
}

/// [r]_t! = product over k <= r of (1 + t + ... + t^(k-1)).
fn t_factorial(r: usize) -> TPoly {
    let mut prod = TPoly::one();
    for k in 2..=r {
        let ones = TPoly::from_coeffs(vec![num_bigint::BigInt::from(1); k]);
        prod = &prod * &ones;
    }
    prod
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

fn inversion_sign(w: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Hall-Littlewood P function computed straight from its symmetrization
/// definition: sum over all permutations w of the alternant term
/// sgn(w) * x_w^lambda * prod_{i<j} (x_{w(i)} - t x_{w(j)}), divided exactly
/// by the Vandermonde product, then by the t-factorials of the part
/// multiplicities (multiplicity of 0 counts the unused variables).
pub fn raw_p(lambda: &Partition, nvars: usize) -> Result<MPoly> {
    if nvars > ORACLE_MAX_VARS {
        return Err(Error::CapExceeded(format!(
            "raw definition capped at {ORACLE_MAX_VARS} variables, requested {nvars}"
        )));
    }
    if lambda.size() > ORACLE_MAX_DEGREE {
        return Err(Error::CapExceeded(format!(
            "raw definition capped at degree {ORACLE_MAX_DEGREE}, requested |{lambda}| = {}",
            lambda.size()
        )));
    }
    if lambda.len() > nvars {
        return Err(Error::Invalid(format!(
            "{lambda} needs at least {} variables, got {nvars}",
            lambda.len()
        )));
    }
    let mut numerator = MPoly::zero(nvars);
    for w in permutations(nvars) {
        let mut term = MPoly::constant(nvars, TPoly::constant(inversion_sign(&w)));
        // x_{w(1)}^{lambda_1} ... x_{w(l)}^{lambda_l}
        let powers: Vec<(usize, u32)> = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(idx, &p)| (w[idx] + 1, p as u32))
            .collect();
        term = term.mul(&MPoly::from_monomial(nvars, &powers, TPoly::one()));
        for i in 0..nvars {
            for j in i + 1..nvars {
                // x_{w(i)} - t x_{w(j)}
                let mut factor = MPoly::x(nvars, w[i] + 1);
                factor = factor.sub(&MPoly::x(nvars, w[j] + 1).scale(&TPoly::t()));
                term = term.mul(&factor);
            }
        }
        numerator = numerator.add(&term);
    }
    let mut quotient = numerator;
    for i in 1..=nvars {
        for j in i + 1..=nvars {
            quotient = quotient.div_exact_linear(i, j)?;
        }
    }
    // Multiplicity of zero = number of variables beyond the parts.
    let mut norm = t_factorial(nvars - lambda.len());
    let mut seen = std::collections::BTreeSet::new();
    for &p in lambda.parts() {
        if seen.insert(p) {
            norm = &norm * &t_factorial(lambda.multiplicity(p));
        }
    }
    quotient.div_exact_coeff(&norm)
}

/// The polynomial in `nvars` variables represented by a formal sum of
/// fundamental or monomial quasisymmetric terms.
pub fn render_terms(
    terms: &[(Vec<usize>, TPoly)],
    basis: Basis,
    nvars: usize,
) -> Result<MPoly> {
    let mut out = MPoly::zero(nvars);
    for (index, coeff) in terms {
        let base = match basis {
            Basis::Fundamental => render_fundamental(index, nvars)?,
            Basis::QuasiMonomial => render_qmonomial(index, nvars),
            _ => {
                return Err(Error::Invalid(format!(
                    "can only render F or M terms, got basis {basis}"
                )))
            }
        };
        out = out.add(&base.scale(coeff));
    }
    Ok(out)
}

/// M_alpha = sum over strictly increasing variable choices of the monomial
/// with alpha as its exponents.
fn render_qmonomial(alpha: &[usize], nvars: usize) -> MPoly {
    let k = alpha.len();
    let mut out = MPoly::zero(nvars);
    if k > nvars {
        return out;
    }
    let mut choice: Vec<usize> = Vec::with_capacity(k);
    fn rec(
        alpha: &[usize],
        nvars: usize,
        next: usize,
        choice: &mut Vec<usize>,
        out: &mut MPoly,
    ) {
        if choice.len() == alpha.len() {
            let powers: Vec<(usize, u32)> = choice
                .iter()
                .zip(alpha)
                .map(|(&v, &p)| (v, p as u32))
                .collect();
            *out = out.add(&MPoly::from_monomial(nvars, &powers, TPoly::one()));
            return;
        }
        for v in next..=nvars {
            choice.push(v);
            rec(alpha, nvars, v + 1, choice, out);
            choice.pop();
        }
    }
    rec(alpha, nvars, 1, &mut choice, &mut out);
    out
}

/// F_alpha = sum over weakly increasing variable words of length |alpha| that
/// rise strictly across the boundaries recorded by alpha.
fn render_fundamental(alpha: &[usize], nvars: usize) -> Result<MPoly> {
    let n: usize = alpha.iter().sum();
    let strict_after: Vec<bool> = {
        let mut v = vec![false; n.saturating_sub(1)];
        let mut acc = 0;
        for &p in &alpha[..alpha.len().saturating_sub(1)] {
            acc += p;
            v[acc - 1] = true;
        }
        v
    };
    let mut out = MPoly::zero(nvars);
    let mut word: Vec<usize> = Vec::with_capacity(n);
    fn rec(
        n: usize,
        nvars: usize,
        strict_after: &[bool],
        word: &mut Vec<usize>,
        out: &mut MPoly,
    ) {
        if word.len() == n {
            let powers: Vec<(usize, u32)> = word.iter().map(|&v| (v, 1)).collect();
            *out = out.add(&MPoly::from_monomial(nvars, &powers, TPoly::one()));
            return;
        }
        let lo = match word.last() {
            None => 1,
            Some(&prev) => {
                if strict_after[word.len() - 1] {
                    prev + 1
                } else {
                    prev
                }
            }
        };
        for v in lo..=nvars {
            word.push(v);
            rec(n, nvars, strict_after, word, out);
            word.pop();
        }
    }
    rec(n, nvars, &strict_after, &mut word, &mut out);
    Ok(out)
}

/// Reads the monomial quasisymmetric expansion of a homogeneous
/// quasisymmetric polynomial of degree n: the coefficient of each composition
/// is taken from its leading-variables monomial, and the claim that this
/// accounts for the whole polynomial is verified by re-rendering. Returns the
/// nonzero terms in canonical composition order.
pub fn extract_m_terms(f: &MPoly, n: usize) -> Result<Vec<(Vec<usize>, TPoly)>> {
    let nvars = f.nvars();
    let mut terms: Vec<(Vec<usize>, TPoly)> = Vec::new();
    for alpha in compositions_of(n) {
        if alpha.len() > nvars {
            if alpha.len() > n {
                continue;
            }
            return Err(Error::Invalid(format!(
                "cannot read degree-{n} expansions from {nvars} variables"
            )));
        }
        let mut exps = vec![0u32; nvars];
        for (i, &p) in alpha.parts().iter().enumerate() {
            exps[i] = p as u32;
        }
        let c = f.coeff(&exps);
        if !c.is_zero() {
            terms.push((alpha.parts().to_vec(), c));
        }
    }
    let rendered = render_terms(&terms, Basis::QuasiMonomial, nvars)?;
    if &rendered != f {
        return Err(Error::Invalid(
            "polynomial is not quasisymmetric of the stated degree".into(),
        ));
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexset::{is_finer, SkewShape};
    use crate::tableaux::enumerate_ssyt;
    use crate::transition::expand_skew;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn polynomial_arithmetic() {
        let x1 = MPoly::x(3, 1);
        let x2 = MPoly::x(3, 2);
        let p = x1.add(&x2);
        let q = x1.sub(&x2);
        let prod = p.mul(&q);
        // (x1 + x2)(x1 - x2) = x1^2 - x2^2
        assert_eq!(prod.coeff(&[2, 0, 0]), TPoly::one());
        assert_eq!(prod.coeff(&[0, 2, 0]), TPoly::constant(-1));
        assert_eq!(prod.coeff(&[1, 1, 0]), TPoly::zero());
        let back = prod.div_exact_linear(1, 2).unwrap();
        assert_eq!(back, p);
        assert!(p.div_exact_linear(1, 2).is_err());
    }

    #[test]
    fn t_factorials() {
        assert_eq!(t_factorial(0), TPoly::one());
        assert_eq!(t_factorial(1), TPoly::one());
        assert_eq!(t_factorial(2), TPoly::parse("1 + t").unwrap());
        assert_eq!(
            t_factorial(3),
            TPoly::parse("(1 + t)(1 + t + t^2)").unwrap()
        );
    }

    #[test]
    fn raw_hook_shape() {
        let p = raw_p(&part(&[2, 1]), 3).unwrap();
        assert_eq!(p.coeff(&[2, 1, 0]), TPoly::one());
        assert_eq!(p.coeff(&[1, 2, 0]), TPoly::one());
        assert_eq!(p.coeff(&[0, 2, 1]), TPoly::one());
        assert_eq!(p.coeff(&[1, 1, 1]), TPoly::parse("2 - t - t^2").unwrap());
        assert_eq!(p.coeff(&[3, 0, 0]), TPoly::zero());
    }

    #[test]
    fn raw_single_column_is_one_monomial() {
        for n in 1..=4 {
            let lam = part(&vec![1; n]);
            let p = raw_p(&lam, n).unwrap();
            let terms: Vec<_> = p.terms().collect();
            assert_eq!(terms.len(), 1, "n = {n}");
            assert_eq!(terms[0].0, &vec![1u32; n]);
            assert_eq!(terms[0].1, &TPoly::one());
        }
    }

    #[test]
    fn raw_at_t_zero_counts_column_strict_fillings() {
        for lam in [part(&[3]), part(&[2, 1]), part(&[1, 1, 1])] {
            let p = raw_p(&lam, 3).unwrap().at_zero();
            let mut expect = MPoly::zero(3);
            let shape = SkewShape::straight(lam.clone());
            for t in enumerate_ssyt(&shape, 3, None).unwrap() {
                let powers: Vec<(usize, u32)> = t
                    .content()
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (i + 1, m as u32))
                    .collect();
                expect = expect.add(&MPoly::from_monomial(3, &powers, TPoly::one()));
            }
            assert_eq!(p, expect, "{lam}");
        }
    }

    #[test]
    fn raw_caps_and_preconditions() {
        assert!(matches!(
            raw_p(&part(&[2, 1]), 6),
            Err(Error::CapExceeded(_))
        ));
        assert!(matches!(
            raw_p(&part(&[5]), 5),
            Err(Error::CapExceeded(_))
        ));
        assert!(raw_p(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn rendered_fundamentals() {
        let f2 = render_terms(&[(vec![2], TPoly::one())], Basis::Fundamental, 2).unwrap();
        let mut expect = MPoly::from_monomial(2, &[(1, 2)], TPoly::one());
        expect = expect.add(&MPoly::from_monomial(2, &[(1, 1), (2, 1)], TPoly::one()));
        expect = expect.add(&MPoly::from_monomial(2, &[(2, 2)], TPoly::one()));
        assert_eq!(f2, expect);

        let f21 = render_terms(&[(vec![2, 1], TPoly::one())], Basis::Fundamental, 3).unwrap();
        assert_eq!(f21.coeff(&[1, 1, 1]), TPoly::one());
        assert_eq!(f21.coeff(&[2, 1, 0]), TPoly::one());
        assert_eq!(f21.coeff(&[1, 2, 0]), TPoly::zero());
    }

    #[test]
    fn rendered_monomials() {
        let m11 = render_terms(&[(vec![1, 1], TPoly::one())], Basis::QuasiMonomial, 3).unwrap();
        let mut expect = MPoly::from_monomial(3, &[(1, 1), (2, 1)], TPoly::one());
        expect = expect.add(&MPoly::from_monomial(3, &[(1, 1), (3, 1)], TPoly::one()));
        expect = expect.add(&MPoly::from_monomial(3, &[(2, 1), (3, 1)], TPoly::one()));
        assert_eq!(m11, expect);
    }

    #[test]
    fn extraction_of_fundamentals_lists_refinements() {
        for alpha in compositions_of(3) {
            let f = render_terms(
                &[(alpha.parts().to_vec(), TPoly::one())],
                Basis::Fundamental,
                4,
            )
            .unwrap();
            let got = extract_m_terms(&f, 3).unwrap();
            let expect: Vec<(Vec<usize>, TPoly)> = compositions_of(3)
                .into_iter()
                .filter(|beta| is_finer(beta, &alpha).unwrap())
                .map(|beta| (beta.parts().to_vec(), TPoly::one()))
                .collect();
            assert_eq!(got, expect, "alpha = {alpha}");
        }
    }

    #[test]
    fn extraction_of_raw_hall_littlewood() {
        let p = raw_p(&part(&[2, 1]), 3).unwrap();
        let got = extract_m_terms(&p, 3).unwrap();
        assert_eq!(
            got,
            vec![
                (vec![2, 1], TPoly::one()),
                (vec![1, 2], TPoly::one()),
                (vec![1, 1, 1], TPoly::parse("2 - t - t^2").unwrap()),
            ]
        );
    }

    #[test]
    fn extraction_rejects_lopsided_input() {
        let f = MPoly::x(2, 1);
        assert!(extract_m_terms(&f, 1).is_err());
        let sym = MPoly::x(2, 1).add(&MPoly::x(2, 2));
        assert_eq!(
            extract_m_terms(&sym, 1).unwrap(),
            vec![(vec![1], TPoly::one())]
        );
    }

    #[test]
    fn extraction_of_tiny_products() {
        let f = MPoly::from_monomial(2, &[(1, 1), (2, 1)], TPoly::one());
        assert_eq!(
            extract_m_terms(&f, 2).unwrap(),
            vec![(vec![1, 1], TPoly::one())]
        );
    }

    #[test]
    fn formal_expansion_renders_to_raw_polynomial() {
        let lam = part(&[2, 1]);
        let e = expand_skew(
            Basis::HallLittlewoodP,
            &SkewShape::straight(lam.clone()),
            Basis::Fundamental,
        )
        .unwrap();
        let terms: Vec<(Vec<usize>, TPoly)> = e
            .terms
            .iter()
            .map(|t| (t.index.clone(), t.coeff.clone()))
            .collect();
        let rendered = render_terms(&terms, Basis::Fundamental, 3).unwrap();
        assert_eq!(rendered, raw_p(&lam, 3).unwrap());
    }
}
