//! Independent ground-truth generators: Kohnert-diagram closure,
//! divided-difference key polynomials, and direct lattice-point counting
//! through the rank inequalities. None of these share code with the path
//! engine, so agreement between the two sides is meaningful evidence.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matroid::{self, SchubertSet};
use crate::{Error, Result};

/// Size limits for the brute-force oracles. All constants are configuration;
/// the defaults keep the full oracle triangle in the minutes range.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    /// Maximum number of boxes for Kohnert closures.
    pub max_boxes: usize,
    /// Maximum ground size for direct lattice-point enumeration.
    pub max_ground: u32,
    /// Maximum dilation for direct lattice-point enumeration.
    pub max_dilation: i64,
    /// Maximum number of tuples (t+1)^(a+b) for brute-force F counting.
    pub max_tuples: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            max_boxes: 12,
            max_ground: 8,
            max_dilation: 4,
            max_tuples: 100_000_000,
        }
    }
}

/// A diagram: a finite set of (row, column) cells, both coordinates
/// starting at 1, rows growing downward.
pub type Diagram = BTreeSet<(u32, u32)>;

/// The skyline diagram of a composition: the first alpha_i cells of row i.
pub fn skyline(alpha: &[u32]) -> Diagram {
    alpha
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| (1..=a).map(move |j| (i as u32 + 1, j)))
        .collect()
}

/// Row-count vector (beta_1, ..., beta_n) of a diagram over n rows.
pub fn row_counts(d: &Diagram, rows: usize) -> Vec<u32> {
    let mut counts = vec![0u32; rows];
    for &(i, _) in d {
        counts[i as usize - 1] += 1;
    }
    counts
}

/// All diagrams reachable from `d` by exactly one Kohnert move: the
/// rightmost box of some row is lifted within its column to the first free
/// cell above it (all cells strictly between must be occupied).
pub fn kohnert_moves(d: &Diagram) -> Vec<Diagram> {
    let rows: BTreeSet<u32> = d.iter().map(|&(i, _)| i).collect();
    let mut out = Vec::new();
    for &i in &rows {
        let j = d
            .iter()
            .filter(|&&(r, _)| r == i)
            .map(|&(_, c)| c)
            .max()
            .unwrap();
        // First free cell looking upward in column j.
        let mut target = None;
        for r in (1..i).rev() {
            if !d.contains(&(r, j)) {
                target = Some(r);
                break;
            }
        }
        if let Some(r) = target {
            let mut next = d.clone();
            next.remove(&(i, j));
            next.insert((r, j));
            out.push(next);
        }
    }
    out
}

/// Breadth-first closure of the skyline diagram of alpha under Kohnert
/// moves. The total box count must fit the budget.
pub fn kohnert_closure(alpha: &[u32], budgets: &Budgets) -> Result<BTreeSet<Diagram>> {
    let boxes: u32 = alpha.iter().sum();
    if boxes as usize > budgets.max_boxes {
        return Err(Error::BudgetExceeded(format!(
            "kohnert closure of {boxes} boxes exceeds budget {}",
            budgets.max_boxes
        )));
    }
    let start = skyline(alpha);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(d) = queue.pop_front() {
        for next in kohnert_moves(&d) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Number of distinct monomials of kappa_alpha, i.e. distinct row-count
/// vectors over the Kohnert closure.
pub fn kohnert_monomial_count(alpha: &[u32], budgets: &Budgets) -> Result<BigInt> {
    let closure = kohnert_closure(alpha, budgets)?;
    let weights: BTreeSet<Vec<u32>> = closure
        .iter()
        .map(|d| row_counts(d, alpha.len()))
        .collect();
    Ok(BigInt::from(weights.len()))
}

/// A multivariate polynomial over the integers: exponent vector to nonzero
/// coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultivariatePolynomial {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exponents: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    /// Multiplication by the single variable x_i (0-based).
    pub fn mul_var(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            let mut e = e.clone();
            e[i] += 1;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Swaps the exponents of x_i and x_{i+1} in every term.
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            let mut e = e.clone();
            e.swap(i, i + 1);
            out.add_term(e, c.clone());
        }
        out
    }
}

/// Exact division of `g` by (x_i - x_{i+1}), failing with a consistency
/// error when the remainder is nonzero.
fn divide_by_difference(g: &MultivariatePolynomial, i: usize) -> Result<MultivariatePolynomial> {
    let mut rem = g.clone();
    let mut quotient = MultivariatePolynomial::zero();
    loop {
        let pick = rem
            .terms()
            .filter(|(e, _)| e[i] >= 1)
            .max_by_key(|(e, _)| (e[i], (*e).clone()))
            .map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = pick else { break };
        let mut qe = e.clone();
        qe[i] -= 1;
        quotient.add_term(qe.clone(), c.clone());
        // rem -= (x_i - x_{i+1}) * c * x^qe
        rem.add_term(e, -c.clone());
        let mut lower = qe;
        lower[i + 1] += 1;
        rem.add_term(lower, c);
    }
    if rem.is_zero() {
        Ok(quotient)
    } else {
        Err(Error::Inconsistency(
            "divided difference left a nonzero remainder".into(),
        ))
    }
}

/// The divided difference operator: (f - s_i f) / (x_i - x_{i+1}).
pub fn divided_difference(f: &MultivariatePolynomial, i: usize) -> Result<MultivariatePolynomial> {
    divide_by_difference(&f.sub(&f.swap_adjacent(i)), i)
}

/// Which ascent to recurse on when computing a key polynomial. The result
/// is independent of the choice; computing both ways is itself a test.
#[derive(Clone, Copy, Debug)]
pub enum AscentChoice {
    Smallest,
    Largest,
}

/// Key polynomial of a composition by the divided-difference recursion:
/// a single monomial for partitions, else kappa_alpha = d_i(x_i kappa_a')
/// where a' swaps an ascent alpha_i < alpha_{i+1}.
pub fn key_polynomial_with(
    alpha: &[u32],
    choice: AscentChoice,
) -> Result<MultivariatePolynomial> {
    let ascents: Vec<usize> = (0..alpha.len().saturating_sub(1))
        .filter(|&i| alpha[i] < alpha[i + 1])
        .collect();
    let Some(&i) = (match choice {
        AscentChoice::Smallest => ascents.first(),
        AscentChoice::Largest => ascents.last(),
    }) else {
        // Weakly decreasing: a single monomial.
        return Ok(MultivariatePolynomial::monomial(
            alpha.to_vec(),
            BigInt::from(1),
        ));
    };
    let mut swapped = alpha.to_vec();
    swapped.swap(i, i + 1);
    let inner = key_polynomial_with(&swapped, choice)?;
    divided_difference(&inner.mul_var(i), i)
}

pub fn key_polynomial(alpha: &[u32]) -> Result<MultivariatePolynomial> {
    key_polynomial_with(alpha, AscentChoice::Smallest)
}

/// Direct lattice-point count of t * P(SM_n(S)): all vectors beta in
/// [0,t]^n with sum t|S| satisfying sum_{i in T} beta_i <= t rk(T) for
/// every proper subset T of [n].
pub fn lattice_points_direct(s: &SchubertSet, t: i64, budgets: &Budgets) -> Result<BigInt> {
    let n = s.ground_size();
    if n > budgets.max_ground || t > budgets.max_dilation {
        return Err(Error::BudgetExceeded(format!(
            "direct enumeration needs n <= {} and t <= {}, got n={n} t={t}",
            budgets.max_ground, budgets.max_dilation
        )));
    }
    if t < 0 {
        return Err(Error::InvalidInput("dilation must be nonnegative".into()));
    }
    let n = n as usize;
    // Scaled rank bound t*rk(T) for every subset bitmask.
    let mut bound = vec![0i64; 1 << n];
    for mask in 0..1u32 << n {
        let subset: Vec<u32> = (1..=n as u32).filter(|e| mask >> (e - 1) & 1 == 1).collect();
        bound[mask as usize] = t * matroid::rank(s, &subset)? as i64;
    }
    let target = t * s.rank_total() as i64;
    let full = (1usize << n) - 1;
    let mut count = BigInt::zero();
    let mut beta = vec![0i64; n];
    fn rec(
        idx: usize,
        remaining: i64,
        t: i64,
        beta: &mut Vec<i64>,
        bound: &[i64],
        full: usize,
        count: &mut BigInt,
    ) {
        let n = beta.len();
        if idx == n {
            if remaining == 0 {
                #[allow(clippy::needless_range_loop)] // mask is a bitmask, not an index
                for mask in 1..full {
                    let sum: i64 = (0..n)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| beta[i])
                        .sum();
                    if sum > bound[mask] {
                        return;
                    }
                }
                *count += 1;
            }
            return;
        }
        let slots_left = (n - idx - 1) as i64;
        for b in 0..=t.min(remaining) {
            if remaining - b > slots_left * t {
                continue;
            }
            beta[idx] = b;
            rec(idx + 1, remaining - b, t, beta, bound, full, count);
        }
        beta[idx] = 0;
    }
    rec(0, target, t, &mut beta, &bound, full, &mut count);
    Ok(count)
}

/// Direct enumeration of F(a,b,c,t): tuples in [0,t]^{a+b} with sum bt+c.
pub fn f_bruteforce(a: i64, b: i64, c: i64, t: i64, budgets: &Budgets) -> Result<BigInt> {
    if a < 0 || b < 0 || t < 0 || a + b < 1 {
        return Err(Error::InvalidInput(format!(
            "f_bruteforce requires a,b,t >= 0 and a+b >= 1, got a={a} b={b} t={t}"
        )));
    }
    let vars = (a + b) as u32;
    let tuples = (t as u128 + 1).checked_pow(vars).unwrap_or(u128::MAX);
    if tuples > budgets.max_tuples {
        return Err(Error::BudgetExceeded(format!(
            "f_bruteforce over {tuples} tuples exceeds budget {}",
            budgets.max_tuples
        )));
    }
    fn rec(vars_left: i64, remaining: i64, t: i64) -> BigInt {
        if vars_left == 0 {
            return if remaining == 0 { BigInt::from(1) } else { BigInt::zero() };
        }
        if remaining < 0 || remaining > vars_left * t {
            return BigInt::zero();
        }
        let mut acc = BigInt::zero();
        for x in 0..=t.min(remaining) {
            acc += rec(vars_left - 1, remaining - x, t);
        }
        acc
    }
    Ok(rec(a + b, b * t + c, t))
}
