//! The counting core: the weight factor F(a,b,c,t), the constrained-path
//! summation for i(SM_n(S), t), Ehrhart polynomial reconstruction, and the
//! closed forms for the uniform, minimal, sparse paving and Catalan
//! families.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, enumerate_gamma, eulerian, factorial, weighted_lah};
use crate::matroid::RSequence;
use crate::poly::{interpolate, RationalPolynomial};
use crate::{Error, Result};

/// F(a,b,c,t): the number of integer vectors in [0,t]^{a+b} with coordinate
/// sum bt+c, by the alternating binomial sum
/// sum_{j=0}^{a+b} (-1)^j C(a+b,j) C((t+1)(b-j)+a+c-1, a+b-1).
pub fn f_closed(a: i64, b: i64, c: i64, t: i64) -> Result<BigInt> {
    if a < 0 || b < 0 || t < 0 || a + b < 1 {
        return Err(Error::InvalidInput(format!(
            "f_closed requires a,b,t >= 0 and a+b >= 1, got a={a} b={b} t={t}"
        )));
    }
    let mut acc = BigInt::zero();
    for j in 0..=a + b {
        let term = binomial(a + b, j) * binomial((t + 1) * (b - j) + a + c - 1, a + b - 1);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The same count read off as the coefficient of x^{bt+c} in
/// (1 + x + ... + x^t)^{a+b}, by exact polynomial multiplication.
pub fn f_generating_function(a: i64, b: i64, c: i64, t: i64) -> Result<BigInt> {
    if a < 0 || b < 0 || t < 0 || a + b < 1 {
        return Err(Error::InvalidInput(format!(
            "f_generating_function requires a,b,t >= 0 and a+b >= 1, got a={a} b={b} t={t}"
        )));
    }
    let target = b * t + c;
    if target < 0 || target > (a + b) * t {
        return Ok(BigInt::zero());
    }
    let target = target as usize;
    let mut coeffs = vec![BigInt::one()];
    for _ in 0..a + b {
        let mut next = vec![BigInt::zero(); (coeffs.len() + t as usize).min(target + 1)];
        for (i, c0) in coeffs.iter().enumerate() {
            if c0.is_zero() {
                continue;
            }
            for d in 0..=t as usize {
                if i + d < next.len() {
                    next[i + d] += c0;
                }
            }
        }
        coeffs = next;
    }
    Ok(coeffs.get(target).cloned().unwrap_or_else(BigInt::zero))
}

/// Depth-first walk over the admissible offset vectors (c_1,...,c_m):
/// -t*v_j <= c_j <= t*u_j, all prefix sums nonnegative, total sum zero.
/// A branch is cut when the running prefix exceeds the descent capacity
/// t*(v_{j+1} + ... + v_m) of the remaining steps.
fn walk_paths<F: FnMut(&[i64])>(r: &RSequence, t: i64, visit: &mut F) {
    let uv = r.uv_bounds();
    let m = r.pairs();
    // descent_cap[j] = t * sum_{i > j} v_i (0-indexed step j)
    let mut descent_cap = vec![0i64; m + 1];
    for j in (0..m).rev() {
        descent_cap[j] = descent_cap[j + 1] + t * uv.v[j] as i64;
    }
    let mut path = Vec::with_capacity(m);
    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&[i64])>(
        j: usize,
        prefix: i64,
        t: i64,
        u: &[u32],
        v: &[u32],
        descent_cap: &[i64],
        path: &mut Vec<i64>,
        visit: &mut F,
    ) {
        let m = u.len();
        if j == m {
            if prefix == 0 {
                visit(path);
            }
            return;
        }
        let lo = -(t * v[j] as i64);
        let hi = t * u[j] as i64;
        for c in lo..=hi {
            let next = prefix + c;
            if next < 0 || next > descent_cap[j + 1] {
                continue;
            }
            path.push(c);
            rec(j + 1, next, t, u, v, descent_cap, path, visit);
            path.pop();
        }
    }
    rec(0, 0, t, &uv.u, &uv.v, &descent_cap, &mut path, visit);
}

/// All admissible offset vectors for (r, t), in lexicographic DFS order.
pub fn path_vectors(r: &RSequence, t: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    walk_paths(r, t, &mut |p| out.push(p.to_vec()));
    out
}

/// i(SM_n(S), t): sum over admissible offset vectors of the product of
/// per-pair weights F(r_{2j-1}, r_{2j}, c_j, t).
pub fn count_dilation(r: &RSequence, t: i64) -> BigInt {
    assert!(t >= 0, "dilation must be nonnegative");
    let blocks = r.blocks();
    let mut total = BigInt::zero();
    walk_paths(r, t, &mut |path| {
        let mut weight = BigInt::one();
        for (j, &c) in path.iter().enumerate() {
            let a = blocks[2 * j] as i64;
            let b = blocks[2 * j + 1] as i64;
            weight *= f_closed(a, b, c, t).expect("valid r-sequence pair");
            if weight.is_zero() {
                return;
            }
        }
        total += weight;
    });
    total
}

/// Ehrhart polynomial of SM_n(S), interpolated at t = 0..n. The true degree
/// is at most n-1; the extra sample point makes degree inflation visible as
/// a nonzero t^n coefficient.
pub fn ehrhart_polynomial(r: &RSequence) -> RationalPolynomial {
    let n = r.ground_size() as i64;
    let points: Vec<(i64, BigInt)> =
        (0..=n).map(|t| (t, count_dilation(r, t))).collect();
    interpolate(&points).expect("distinct nodes")
}

/// i(U_{k,n}, t) = F(n-k, k, 0, t).
pub fn uniform_count(k: i64, n: i64, t: i64) -> Result<BigInt> {
    if !(1 <= k && k < n) {
        return Err(Error::InvalidInput(format!(
            "uniform matroid requires n > k >= 1, got k={k} n={n}"
        )));
    }
    f_closed(n - k, k, 0, t)
}

/// Ehrhart polynomial of U_{k,n} (degree n-1), from n sample points.
pub fn uniform_polynomial(k: i64, n: i64) -> Result<RationalPolynomial> {
    let points = (0..n)
        .map(|t| Ok((t, uniform_count(k, n, t)?)))
        .collect::<Result<Vec<_>>>()?;
    interpolate(&points)
}

/// F(a,b,0,t) as a genuine polynomial: the Ehrhart polynomial of
/// U_{b, a+b}, interpolated at t = 0..a+b-1.
pub fn f_zero_polynomial(a: i64, b: i64) -> Result<RationalPolynomial> {
    let points = (0..a + b)
        .map(|t| Ok((t, f_closed(a, b, 0, t)?)))
        .collect::<Result<Vec<_>>>()?;
    interpolate(&points)
}

/// Stable-region interpolant of F(a,b,c,.): interpolate at
/// t = |c| .. |c|+a+b-1 and re-check agreement at the next a+b points.
/// Returns the interpolant and whether the stability check passed.
pub fn f_stable_interpolant(a: i64, b: i64, c: i64) -> Result<(RationalPolynomial, bool)> {
    let start = c.abs();
    let points = (start..start + a + b)
        .map(|t| Ok((t, f_closed(a, b, c, t)?)))
        .collect::<Result<Vec<_>>>()?;
    let poly = interpolate(&points)?;
    let mut stable = true;
    for t in start + a + b..start + 2 * (a + b) {
        if poly.eval_int(t) != BigRational::from_integer(f_closed(a, b, c, t)?) {
            stable = false;
            break;
        }
    }
    Ok((poly, stable))
}

fn checked_equal(label: &str, lhs: BigInt, rhs: BigInt) -> Result<BigInt> {
    if lhs == rhs {
        Ok(lhs)
    } else {
        Err(Error::Inconsistency(format!(
            "{label}: routes disagree ({lhs} vs {rhs})"
        )))
    }
}

/// i(T_{k,n}, t) for the minimal matroid, r = (1, k-1, n-k-1, 1), evaluated
/// by both closed forms, which must agree:
///   sum_{j=0}^t C(j+n-k-1, n-k-1) C(k+j-1, j)
/// and
///   C(t+n-k, n-k)/C(n-1, k-1) * sum_{j=0}^{k-1} C(n-k+j-1, j) C(t+j, j).
pub fn minimal_count(k: i64, n: i64, t: i64) -> Result<BigInt> {
    if !(2 <= k && k < n) {
        return Err(Error::InvalidInput(format!(
            "minimal matroid requires n > k >= 2, got k={k} n={n}"
        )));
    }
    let direct: BigInt = (0..=t)
        .map(|j| binomial(j + n - k - 1, n - k - 1) * binomial(k + j - 1, j))
        .sum();
    let sum: BigInt = (0..k)
        .map(|j| binomial(n - k + j - 1, j) * binomial(t + j, j))
        .sum();
    let ratio = BigRational::new(binomial(t + n - k, n - k) * sum, binomial(n - 1, k - 1));
    if !ratio.is_integer() {
        return Err(Error::Inconsistency(format!(
            "minimal_count({k},{n},{t}): closed form is not an integer: {ratio}"
        )));
    }
    checked_equal("minimal_count", direct, ratio.to_integer())
}

/// Ehrhart polynomial of T_{k,n} (degree n-1).
pub fn minimal_polynomial(k: i64, n: i64) -> Result<RationalPolynomial> {
    let points = (0..n)
        .map(|t| Ok((t, minimal_count(k, n, t)?)))
        .collect::<Result<Vec<_>>>()?;
    interpolate(&points)
}

/// i(Sp_{k,n}, t) for the sparse paving Schubert matroid,
/// r = (k-1, 1, 1, n-k-1), computed through the path engine and through
/// i(U_{k,n}, t) - i(T_{k,n}, t-1); the two routes must agree.
pub fn sparse_paving_count(k: i64, n: i64, t: i64) -> Result<BigInt> {
    if !(2 <= k && k <= n - 2) {
        return Err(Error::InvalidInput(format!(
            "sparse paving matroid requires 2 <= k <= n-2, got k={k} n={n}"
        )));
    }
    let r = RSequence::new(&[(k - 1) as u32, 1, 1, (n - k - 1) as u32])?;
    let engine = count_dilation(&r, t);
    let minimal_at_prev = minimal_polynomial(k, n)?.eval_int_exact(t - 1)?;
    let via_families = uniform_count(k, n, t)? - minimal_at_prev;
    checked_equal("sparse_paving_count", engine, via_families)
}

/// Ehrhart polynomial of Sp_{k,n}: i(U_{k,n}, t) - i(T_{k,n}, t-1).
pub fn sparse_paving_polynomial(k: i64, n: i64) -> Result<RationalPolynomial> {
    if !(2 <= k && k <= n - 2) {
        return Err(Error::InvalidInput(format!(
            "sparse paving matroid requires 2 <= k <= n-2, got k={k} n={n}"
        )));
    }
    Ok(uniform_polynomial(k, n)?.sub(&minimal_polynomial(k, n)?.shift_arg(-1)))
}

/// i((a,b,c,d), t) by the single sum
/// sum_{j=0}^{t*min(a,d)} F(a,b,j,t) F(c,d,-j,t), valid for nonnegative
/// block sizes with a+b >= 1 and c+d >= 1.
pub fn four_block_count(a: i64, b: i64, c: i64, d: i64, t: i64) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for j in 0..=t * a.min(d) {
        acc += f_closed(a, b, j, t)? * f_closed(c, d, -j, t)?;
    }
    Ok(acc)
}

/// i((a,1,b,1), t) = sum_{j=0}^t F(a,1,j,t) C(b+t-j, b), the rank-2 family.
pub fn rank2_count(a: i64, b: i64, t: i64) -> Result<BigInt> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidInput(format!(
            "rank2_count requires a,b >= 1, got a={a} b={b}"
        )));
    }
    let mut acc = BigInt::zero();
    for j in 0..=t {
        acc += f_closed(a, 1, j, t)? * binomial(b + t - j, b);
    }
    Ok(acc)
}

/// i((a,1,b,1,c,1), t), the rank-3 family:
/// sum_{i=0}^t C(t+c-i, c) sum_{j=0}^{t+i} F(a,1,j,t) F(b,1,i-j,t).
/// The first path offset is bounded below by 0 (v_1 = 0), so j starts at
/// 0: extending the inner sum to negative j adds genuinely nonzero terms
/// and overcounts, e.g. 56 instead of 55 for (a,b,c) = (2,2,2) at t = 1.
pub fn rank3_count(a: i64, b: i64, c: i64, t: i64) -> Result<BigInt> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::InvalidInput(format!(
            "rank3_count requires a,b,c >= 1, got a={a} b={b} c={c}"
        )));
    }
    let mut acc = BigInt::zero();
    for i in 0..=t {
        let mut inner = BigInt::zero();
        for j in 0..=t + i {
            inner += f_closed(a, 1, j, t)? * f_closed(b, 1, i - j, t)?;
        }
        acc += binomial(t + c - i, c) * inner;
    }
    Ok(acc)
}

/// The t^m coefficient of i(U_{k,n}, t):
/// (1/(n-1)!) sum_{j=0}^{k-1} W(j,n,m+1) A(m,k-j-1). Out-of-range m gives 0.
pub fn uniform_coefficient(k: i64, n: i64, m: i64) -> Result<BigRational> {
    if !(1 <= k && k < n) {
        return Err(Error::InvalidInput(format!(
            "uniform matroid requires n > k >= 1, got k={k} n={n}"
        )));
    }
    if m < 0 || m >= n {
        return Ok(BigRational::zero());
    }
    let mut acc = BigInt::zero();
    for j in 0..k {
        acc += weighted_lah(j as u64, n as u64, (m + 1) as u64)?
            * eulerian(m as u64, k - j - 1);
    }
    Ok(BigRational::new(acc, factorial((n - 1) as u64)))
}

/// Ehrhart polynomials i(C_j^{a,b}, t) of the (a,b)-Catalan matroids for
/// j = 1..n, by the cyclic-class recursion:
/// i(C_n) = (1/n) F(na,nb,0,.) - (1/n) F(a,b,0,.)^n + F(a,b,0,.) i(C_{n-1})
///          + sum_{sigma in Gamma_n} (-1)^{l} (d/l) prod_j ibar(C_{sigma_j})
/// with ibar(C_j) = i(C_j) - F(a,b,0,.) i(C_{j-1}) and i(C_1) = F(a,b,0,.).
pub fn catalan_polynomials(n: u32, a: i64, b: i64) -> Result<Vec<RationalPolynomial>> {
    if n < 1 || a < 1 || b < 1 {
        return Err(Error::InvalidInput(format!(
            "catalan matroid requires n,a,b >= 1, got n={n} a={a} b={b}"
        )));
    }
    let f = f_zero_polynomial(a, b)?;
    let mut polys = vec![f.clone()];
    for j in 2..=n as i64 {
        let inv_j = BigRational::new(BigInt::one(), BigInt::from(j));
        let mut p = f_zero_polynomial(j * a, j * b)?
            .sub(&f.pow(j as u32))
            .scale(&inv_j)
            .add(&f.mul(&polys[j as usize - 2]));
        for sigma in enumerate_gamma(j as u64) {
            let mut product = RationalPolynomial::one();
            for &part in sigma.parts() {
                let bar = polys[part as usize - 1].sub(&if part >= 2 {
                    f.mul(&polys[part as usize - 2])
                } else {
                    RationalPolynomial::zero()
                });
                product = product.mul(&bar);
            }
            let sign = if sigma.len() % 2 == 0 { 1 } else { -1 };
            let coeff = BigRational::new(
                BigInt::from(sign) * BigInt::from(sigma.class_size()),
                BigInt::from(sigma.len()),
            );
            p = p.add(&product.scale(&coeff));
        }
        polys.push(p);
    }
    Ok(polys)
}

/// i(C_n^{a,b}, t) as a polynomial.
pub fn catalan_polynomial(n: u32, a: i64, b: i64) -> Result<RationalPolynomial> {
    Ok(catalan_polynomials(n, a, b)?.pop().unwrap())
}

/// ibar(C_n^{a,b}, t) = i(C_n) - F(a,b,0,.) i(C_{n-1}); for n = 1 this is
/// i(C_1) itself.
pub fn catalan_bar_polynomial(n: u32, a: i64, b: i64) -> Result<RationalPolynomial> {
    let polys = catalan_polynomials(n, a, b)?;
    if n == 1 {
        return Ok(polys[0].clone());
    }
    let f = f_zero_polynomial(a, b)?;
    Ok(polys[n as usize - 1].sub(&f.mul(&polys[n as usize - 2])))
}
