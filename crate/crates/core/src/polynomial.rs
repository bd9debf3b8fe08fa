//! Exact sparse polynomials in `x₁, x₂, …` and `t₁, t₂, …` with integer
//! coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write as _};
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::tableaux::WeakComposition;

/// `x^xexp · t^texp`.
///
/// Ordered graded-lexicographically: larger `x`-degree first, then larger
/// `x`-exponent vector first; ties are broken by smaller `t`-degree first,
/// then larger `t`-exponent vector first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: WeakComposition,
    t: WeakComposition,
}

impl Monomial {
    pub fn new(x: impl Into<WeakComposition>, t: impl Into<WeakComposition>) -> Self {
        Monomial { x: x.into(), t: t.into() }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn x_exp(&self) -> &WeakComposition {
        &self.x
    }

    pub fn t_exp(&self) -> &WeakComposition {
        &self.t
    }

    pub fn x_degree(&self) -> u32 {
        self.x.total()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { x: add_exps(&self.x, &other.x), t: add_exps(&self.t, &other.t) }
    }
}

fn add_exps(a: &WeakComposition, b: &WeakComposition) -> WeakComposition {
    let (a, b) = (a.entries(), b.entries());
    let n = a.len().max(b.len());
    let v = (0..n).map(|k| a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0)).collect();
    WeakComposition::new(v)
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .x
            .total()
            .cmp(&self.x.total())
            .then_with(|| other.x.entries().cmp(self.x.entries()))
            .then_with(|| self.t.total().cmp(&other.t.total()))
            .then_with(|| other.t.entries().cmp(self.t.entries()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_vars(out: &mut String, name: char, exps: &WeakComposition, first: &mut bool) {
    for (k, &e) in exps.entries().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !*first {
            out.push('*');
        }
        *first = false;
        let _ = write!(out, "{name}{}", k + 1);
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

impl fmt::Display for Monomial {
    /// `t` variables before `x` variables, e.g. `t1*x1^2*x3`; `1` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut first = true;
        write_vars(&mut out, 't', &self.t, &mut first);
        write_vars(&mut out, 'x', &self.x, &mut first);
        if first {
            out.push('1');
        }
        f.write_str(&out)
    }
}

/// Value substituted for every `t` variable by [`SparsePoly::specialize_t`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TValue {
    Zero,
    One,
}

/// A polynomial stored as a map from monomials to nonzero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        SparsePoly::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = SparsePoly::zero();
        p.add_term(m, c.into());
        p
    }

    /// The variable `x_i` (1-based).
    pub fn x(i: usize) -> Self {
        SparsePoly::term(1, Monomial::new(unit(i), WeakComposition::zero()))
    }

    /// The variable `t_i` (1-based).
    pub fn t(i: usize) -> Self {
        SparsePoly::term(1, Monomial::new(WeakComposition::zero(), unit(i)))
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, Monomial)>) -> Self {
        let mut p = SparsePoly::zero();
        for (c, m) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest index `i` such that `x_i` occurs (0 if none).
    pub fn max_x_var(&self) -> usize {
        self.terms.keys().map(|m| m.x.support_len()).max().unwrap_or(0)
    }

    /// Largest index `i` such that `t_i` occurs (0 if none).
    pub fn max_t_var(&self) -> usize {
        self.terms.keys().map(|m| m.t.support_len()).max().unwrap_or(0)
    }

    /// Applies the transposition `x_i ↔ x_{i+1}`.
    pub fn swap_x(&self, i: usize) -> SparsePoly {
        assert!(i >= 1, "variable indices are 1-based");
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial { x: m.x.transpose(i), t: m.t.clone() }, c.clone());
        }
        out
    }

    /// Whether `self` is invariant under every `x_i ↔ x_{i+1}` with
    /// `i < nvars`.
    pub fn is_symmetric_x(&self, nvars: usize) -> Result<bool> {
        let used = self.max_x_var();
        if used > nvars {
            return Err(Error::VariableOutOfRange { index: used, nvars });
        }
        Ok((1..nvars).all(|i| self.swap_x(i) == *self))
    }

    /// Substitutes the same value for every `t` variable.
    pub fn specialize_t(&self, value: TValue) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            match value {
                TValue::Zero if !m.t.is_zero() => {}
                _ => out.add_term(Monomial { x: m.x.clone(), t: WeakComposition::zero() }, c.clone()),
            }
        }
        out
    }

    /// Sets `x_j = 0` for every `j > nvars`.
    pub fn truncate_x(&self, nvars: usize) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x.support_len() <= nvars)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The part of `x`-degree exactly `degree`.
    pub fn x_homogeneous_component(&self, degree: u32) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x.total() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The coefficient of `t^alpha`, a polynomial in the `x` variables.
    pub fn t_coefficient(&self, alpha: &WeakComposition) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| &m.t == alpha)
                .map(|(m, c)| (Monomial { x: m.x.clone(), t: WeakComposition::zero() }, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Complete homogeneous symmetric polynomial `h_n(x₁, …, x_nvars)`.
    pub fn complete_homogeneous(n: u32, nvars: usize) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for exps in compositions(n, nvars) {
            out.add_term(Monomial::new(exps, WeakComposition::zero()), BigInt::one());
        }
        out
    }

    /// Elementary symmetric polynomial `e_n` of the given variables.
    pub fn elementary(n: usize, vars: &[SparsePoly]) -> SparsePoly {
        // e_n(v₁..v_m) = e_n(v₁..v_{m-1}) + v_m · e_{n-1}(v₁..v_{m-1})
        let mut table = vec![SparsePoly::zero(); n + 1];
        table[0] = SparsePoly::one();
        for v in vars {
            for k in (1..=n).rev() {
                let add = &table[k - 1] * v;
                table[k] = &table[k] + &add;
            }
        }
        table.swap_remove(n)
    }
}

fn unit(i: usize) -> WeakComposition {
    assert!(i >= 1, "variable indices are 1-based");
    let mut v = vec![0; i];
    v[i - 1] = 1;
    WeakComposition::new(v)
}

fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl Ord for SparsePoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl PartialOrd for SparsePoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        self += &rhs;
        self
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &(-rhs)
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: SparsePoly) -> SparsePoly {
        &self - &rhs
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        &self * &rhs
    }
}

impl fmt::Display for SparsePoly {
    /// Terms in canonical order, e.g. `x1^2*x2 - 3*t1*x2 + 1`; `0` when zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_unit_monomial = m.x.is_zero() && m.t.is_zero();
            if is_unit_monomial {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
