//! Univariate polynomials over exact fields, with factorization:
//! Berlekamp over prime fields; squarefree decomposition, rational-root
//! extraction and a Zassenhaus lift over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// Dense polynomial, constant coefficient first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    pub field: FieldSpec,
    pub coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Polynomial {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Polynomial {
        Polynomial { field, coeffs: vec![field.one()] }
    }

    pub fn x(field: FieldSpec) -> Polynomial {
        Polynomial { field, coeffs: vec![field.zero(), field.one()] }
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Polynomial {
        Polynomial::new(field, vec![c])
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new(self.field, (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new(self.field, (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(self.field, out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv().expect("nonzero leading coefficient"))
    }

    pub fn divrem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().inv().expect("leading invertible");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap().mul(&lead_inv);
            if !c.is_zero() {
                quot[k] = c.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&c.mul(b));
                }
            }
            rem.pop();
        }
        (Polynomial::new(self.field, quot), Polynomial::new(self.field, rem))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.divrem(self).1.is_zero()
    }

    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(self.field);
        }
        Polynomial::new(
            self.field,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&self.field.from_i64(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// x^e modulo self.
    fn pow_x_mod(&self, e: u64) -> Polynomial {
        let mut result = Polynomial::one(self.field);
        let mut base = Polynomial::x(self.field).divrem(self).1;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).divrem(self).1;
            }
            base = base.mul(&base).divrem(self).1;
            e >>= 1;
        }
        result
    }
}

/// Factorization into monic irreducibles with multiplicities, together
/// with the leading unit: input = unit * prod f_i^{e_i}.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    pub fn product(&self, field: FieldSpec) -> Polynomial {
        let mut p = Polynomial::constant(field, self.unit.clone());
        for (f, e) in &self.factors {
            for _ in 0..*e {
                p = p.mul(f);
            }
        }
        p
    }
}

/// Factors a nonzero polynomial into monic irreducibles.
pub fn factor(p: &Polynomial) -> Result<Factorization, Error> {
    if p.is_zero() {
        return Err(Error::Parse("cannot factor the zero polynomial".into()));
    }
    let unit = p.leading();
    let monic = p.monic();
    if monic.degree() == Some(0) {
        return Ok(Factorization { unit, factors: Vec::new() });
    }
    let squarefree = squarefree_decomposition(&monic)?;
    let mut factors = Vec::new();
    for (part, mult) in squarefree {
        if part.degree() == Some(0) {
            continue;
        }
        let irr = match p.field {
            FieldSpec::Prime(_) => berlekamp_squarefree(&part)?,
            FieldSpec::Rational => factor_squarefree_rational(&part)?,
        };
        for f in irr {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| poly_sort_key(&a.0).cmp(&poly_sort_key(&b.0)));
    Ok(Factorization { unit, factors })
}

fn poly_sort_key(p: &Polynomial) -> (usize, Vec<(BigInt, BigInt)>) {
    (p.coeffs.len(), p.coeffs.iter().map(|c| c.to_ratio()).collect())
}

/// Squarefree decomposition of a monic polynomial; valid in any
/// characteristic. In characteristic p, exponents divisible by p are
/// peeled off through p-th roots (Frobenius fixes prime fields).
pub fn squarefree_decomposition(f: &Polynomial) -> Result<Vec<(Polynomial, u32)>, Error> {
    fn pth_root(g: &Polynomial, p: u64) -> Polynomial {
        let mut h = Vec::new();
        for (i, c) in g.coeffs.iter().enumerate() {
            if i as u64 % p == 0 {
                h.push(c.clone());
            } else {
                assert!(c.is_zero(), "not a p-th power composition");
            }
        }
        Polynomial::new(g.field, h)
    }

    fn go(f: &Polynomial, scale: u32, out: &mut Vec<(Polynomial, u32)>) {
        if f.degree().unwrap_or(0) == 0 {
            return;
        }
        let df = f.derivative();
        let p = f.field.characteristic();
        if df.is_zero() {
            go(&pth_root(f, p), scale * p as u32, out);
            return;
        }
        let mut c = f.gcd(&df);
        let mut w = f.divrem(&c).0;
        let mut i = 1u32;
        while w.degree().unwrap_or(0) > 0 {
            let y = w.gcd(&c);
            let z = w.divrem(&y).0;
            if z.degree().unwrap_or(0) > 0 {
                out.push((z, scale * i));
            }
            c = c.divrem(&y).0;
            w = y;
            i += 1;
        }
        // what is left of c carries only exponents divisible by p
        if c.degree().unwrap_or(0) > 0 {
            go(&pth_root(&c, p), scale * p as u32, out);
        }
    }

    let mut out = Vec::new();
    go(&f.monic(), 1, &mut out);
    // merge equal factors picked up on different branches
    let mut merged: Vec<(Polynomial, u32)> = Vec::new();
    for (f0, e) in out {
        if let Some(entry) = merged.iter_mut().find(|(g, _)| *g == f0) {
            entry.1 += e;
        } else {
            merged.push((f0, e));
        }
    }
    Ok(merged)
}

/// Berlekamp factorization of a squarefree monic polynomial over F_p.
fn berlekamp_squarefree(f: &Polynomial) -> Result<Vec<Polynomial>, Error> {
    let p = match f.field {
        FieldSpec::Prime(p) => p,
        _ => unreachable!(),
    };
    if p > 1 << 16 {
        return Err(Error::CapExceeded(format!(
            "prime-field factorization is capped at p <= 65536 (got {p})"
        )));
    }
    let mut work = vec![f.monic()];
    let mut done = Vec::new();
    while let Some(g) = work.pop() {
        let n = g.degree().unwrap();
        if n == 1 {
            done.push(g);
            continue;
        }
        // Frobenius matrix: columns are x^(i*p) mod g.
        let mut q = Matrix::zero(g.field, n, n);
        for i in 0..n {
            let xe = g.pow_x_mod(i as u64 * p);
            for r in 0..n {
                q.set(r, i, xe.coeff(r));
            }
        }
        let qi = Matrix::from_fn(g.field, n, n, |r, c| {
            if r == c {
                q.get(r, c).sub(&g.field.one())
            } else {
                q.get(r, c).clone()
            }
        });
        let kernel = qi.kernel_basis();
        if kernel.len() == 1 {
            done.push(g);
            continue;
        }
        // pick a non-constant kernel element and split via gcds
        let v = kernel
            .iter()
            .find(|v| v[1..].iter().any(|c| !c.is_zero()))
            .expect("kernel dimension > 1 admits a nonconstant element");
        let vp = Polynomial::new(g.field, v.clone());
        let mut pieces = Vec::new();
        let mut rest = g.clone();
        for c in 0..p {
            if rest.degree() == Some(0) {
                break;
            }
            let shifted = vp.sub(&Polynomial::constant(g.field, g.field.from_i64(c as i64)));
            let d = rest.gcd(&shifted);
            if d.degree().unwrap_or(0) > 0 {
                rest = rest.divrem(&d).0;
                pieces.push(d);
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            pieces.push(rest);
        }
        assert!(pieces.len() > 1, "Berlekamp split must make progress");
        work.extend(pieces);
    }
    done.sort_by(|a, b| poly_sort_key(a).cmp(&poly_sort_key(b)));
    Ok(done)
}

// ---- rational factorization ----

/// Integer polynomial helper, constant-first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ZPoly(Vec<BigInt>);

impl ZPoly {
    fn one() -> ZPoly {
        ZPoly(vec![BigInt::one()])
    }

    fn normalize(mut self) -> ZPoly {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_else(BigInt::zero)
    }

    fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return ZPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly(out).normalize()
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
        }
        g
    }

    fn primitive(&self) -> ZPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        ZPoly(self.0.iter().map(|x| x / &c).collect())
    }

    fn mod_coeffs(&self, m: &BigInt) -> ZPoly {
        ZPoly(self.0.iter().map(|c| c.mod_floor(m)).collect()).normalize()
    }

    fn symmetric_mod(&self, m: &BigInt) -> ZPoly {
        let half = m / 2;
        ZPoly(
            self.0
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
        .normalize()
    }

    /// Exact division over Z; returns the quotient when divisible.
    fn try_divide(&self, divisor: &ZPoly) -> Option<ZPoly> {
        if divisor.0.is_empty() {
            return None;
        }
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        let dl = divisor.leading();
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let (q, r) = rem.last().unwrap().div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                quot[k] = q.clone();
                for (i, b) in divisor.0.iter().enumerate() {
                    rem[k + i] -= &q * b;
                }
            }
            rem.pop();
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(ZPoly(quot).normalize())
        } else {
            None
        }
    }

    fn to_mod_p(&self, p: u64) -> Polynomial {
        let field = FieldSpec::Prime(p);
        let pb = BigInt::from(p);
        Polynomial::new(
            field,
            self.0
                .iter()
                .map(|c| Scalar::Prime { modulus: p, value: c.mod_floor(&pb).to_u64().unwrap() })
                .collect(),
        )
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }
}

const RATIONAL_FACTOR_DEGREE_CAP: usize = 24;

/// Factors a squarefree monic rational polynomial into monic irreducibles.
fn factor_squarefree_rational(f: &Polynomial) -> Result<Vec<Polynomial>, Error> {
    let n = f.degree().unwrap();
    if n > RATIONAL_FACTOR_DEGREE_CAP {
        return Err(Error::CapExceeded(format!(
            "rational factorization is capped at degree {RATIONAL_FACTOR_DEGREE_CAP} (got {n})"
        )));
    }
    if n == 1 {
        return Ok(vec![f.clone()]);
    }
    // Clear denominators to a primitive integer polynomial.
    let mut den = BigInt::one();
    for c in &f.coeffs {
        let (_, d) = c.to_ratio();
        den = den.lcm(&d);
    }
    let mut fz = ZPoly(
        f.coeffs
            .iter()
            .map(|c| {
                let (num, d) = c.to_ratio();
                num * (&den / d)
            })
            .collect(),
    )
    .primitive();

    let mut out: Vec<Polynomial> = Vec::new();
    // Rational-root extraction first: candidates p/q with p | a_0, q | a_n.
    for root in rational_root_candidates(&fz) {
        while fz.degree() >= 1 && fz.eval(&root).is_zero() {
            // divide by (q x - p)
            let lin = ZPoly(vec![-root.numer().clone(), root.denom().clone()]);
            fz = fz.try_divide(&lin).expect("root implies divisibility").primitive();
            out.push(Polynomial::new(
                FieldSpec::Rational,
                vec![
                    Scalar::Rational(-root.clone()),
                    Scalar::Rational(BigRational::one()),
                ],
            ));
        }
    }
    if fz.degree() >= 1 {
        for zf in factor_squarefree_primitive(&fz)? {
            out.push(
                Polynomial::new(
                    FieldSpec::Rational,
                    zf.0.iter().map(|c| Scalar::Rational(BigRational::from(c.clone()))).collect(),
                )
                .monic(),
            );
        }
    }
    Ok(out)
}

/// Candidate rational roots of a primitive integer polynomial, when the
/// constant and leading coefficients are small enough to enumerate.
fn rational_root_candidates(f: &ZPoly) -> Vec<BigRational> {
    let a0 = match f.0.first() {
        Some(c) => c.clone(),
        None => return Vec::new(),
    };
    if a0.is_zero() {
        return vec![BigRational::zero()];
    }
    let an = f.leading();
    let small = |x: &BigInt| x.abs().to_u64().filter(|&v| v <= 1_000_000);
    let (a0s, ans) = match (small(&a0), small(&an)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Vec::new(),
    };
    let divisors = |x: u64| -> Vec<u64> {
        let mut d = Vec::new();
        let mut i = 1;
        while i * i <= x {
            if x % i == 0 {
                d.push(i);
                d.push(x / i);
            }
            i += 1;
        }
        d.sort();
        d.dedup();
        d
    };
    let mut out = Vec::new();
    for p in divisors(a0s) {
        for q in divisors(ans) {
            for sign in [1i64, -1] {
                out.push(BigRational::new(BigInt::from(p as i64 * sign), BigInt::from(q as i64)));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Zassenhaus: factor mod a good prime, Hensel-lift, recombine subsets.
fn factor_squarefree_primitive(fz: &ZPoly) -> Result<Vec<ZPoly>, Error> {
    let n = fz.degree();
    if n == 1 {
        return Ok(vec![fz.clone()]);
    }
    let lead = fz.leading();
    let mut chosen: Option<(u64, Vec<Polynomial>)> = None;
    for p in primes_from(3).take(200) {
        if (&lead % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = fz.to_mod_p(p).monic();
        if fp.degree() != Some(n) {
            continue;
        }
        let dfp = fp.derivative();
        if dfp.is_zero() || fp.gcd(&dfp).degree() != Some(0) {
            continue;
        }
        let factors = berlekamp_squarefree(&fp)?;
        chosen = Some((p, factors));
        break;
    }
    let (p, mod_factors) = chosen.ok_or_else(|| {
        Error::CapExceeded("no suitable prime found for the Zassenhaus lift".into())
    })?;
    if mod_factors.len() == 1 {
        return Ok(vec![fz.clone()]);
    }
    if mod_factors.len() > 20 {
        return Err(Error::CapExceeded(format!(
            "Zassenhaus recombination capped at 20 modular factors (got {})",
            mod_factors.len()
        )));
    }
    // Coefficients of any factor of f, times lc(f), are bounded by
    // 2^n * |lc| * l2norm(f) (Mignotte).
    let norm_sq: BigInt = fz.0.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let bound: BigInt = (BigInt::one() << (n + 1)) * lead.abs() * norm;
    let mut modulus = BigInt::from(p);
    while modulus < BigInt::from(2) * &bound + 1 {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_lift_tree(fz, &mod_factors, p, &modulus);

    // Subset recombination.
    let mut remaining: Vec<ZPoly> = lifted;
    let mut current = fz.clone();
    let mut out = Vec::new();
    let mut subset_size = 1;
    'outer: while 2 * subset_size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for subset in subsets_of_size(&idxs, subset_size) {
            let lc = current.leading();
            let mut cand = ZPoly(vec![lc.clone()]);
            for &i in &subset {
                cand = cand.mul(&remaining[i]).mod_coeffs(&modulus);
            }
            let cand = cand.symmetric_mod(&modulus).primitive();
            if cand.degree() == 0 {
                continue;
            }
            if let Some(q) = current.try_divide(&cand) {
                out.push(cand);
                current = q.primitive();
                remaining = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, f0)| f0.clone())
                    .collect();
                subset_size = 1;
                continue 'outer;
            }
        }
        subset_size += 1;
    }
    if current.degree() > 0 {
        out.push(current.primitive());
    }
    Ok(out)
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if size > n {
        return out;
    }
    if size == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = size - 1;
        while idx[i] == i + n - size {
            if i == 0 {
                return out;
            }
            i -= 1;
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| crate::scalar::is_prime_u64(n))
}

/// Lifts f ≡ lc * prod(monic factors) from mod p to the target modulus (a
/// power of p) with a two-factor quadratic Hensel tree. Returned factors
/// are monic mod target and multiply to f up to the leading unit.
fn hensel_lift_tree(f: &ZPoly, factors: &[Polynomial], p: u64, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let lc_inv = mod_inverse(&f.leading(), target);
        return vec![ZPoly(f.0.iter().map(|c| (c * &lc_inv).mod_floor(target)).collect()).normalize()];
    }
    let mid = factors.len() / 2;
    let pb = BigInt::from(p);
    let to_z = |q: &Polynomial| ZPoly(q.coeffs.iter().map(|c| c.to_ratio().0).collect()).normalize();
    // h: monic product of the left half; g: lc times the right half.
    let mut h = ZPoly::one();
    for fac in &factors[..mid] {
        h = h.mul(&to_z(fac)).mod_coeffs(&pb);
    }
    let mut g = ZPoly(vec![f.leading().mod_floor(&pb)]);
    for fac in &factors[mid..] {
        g = g.mul(&to_z(fac)).mod_coeffs(&pb);
    }
    let (s, t) = bezout_mod_p(&g, &h, p);
    let (g, h) = hensel_pair(f, &g, &h, &s, &t, &pb, target);
    let mut left = hensel_lift_tree(&h, &factors[..mid], p, target);
    let right = hensel_lift_tree(&g, &factors[mid..], p, target);
    left.extend(right);
    left
}

/// Quadratic Hensel step iterated to the target: maintains f ≡ g h,
/// s g + t h ≡ 1, with h monic throughout.
fn hensel_pair(
    f: &ZPoly,
    g0: &ZPoly,
    h0: &ZPoly,
    s0: &ZPoly,
    t0: &ZPoly,
    start: &BigInt,
    target: &BigInt,
) -> (ZPoly, ZPoly) {
    let mut m = start.clone();
    let mut g = g0.clone();
    let mut h = h0.clone();
    let mut s = s0.clone();
    let mut t = t0.clone();
    while &m < target {
        let m2 = &m * &m;
        let e = zsub(&f.mod_coeffs(&m2), &g.mul(&h)).mod_coeffs(&m2);
        let (q, r) = zdivrem_monic(&s.mul(&e).mod_coeffs(&m2), &h, &m2);
        let g_new = zadd(&zadd(&g, &t.mul(&e)), &q.mul(&g)).mod_coeffs(&m2);
        let h_new = zadd(&h, &r).mod_coeffs(&m2);
        let b = zsub(&zadd(&s.mul(&g_new), &t.mul(&h_new)), &ZPoly::one()).mod_coeffs(&m2);
        let (c, d) = zdivrem_monic(&s.mul(&b).mod_coeffs(&m2), &h_new, &m2);
        let s_new = zsub(&s, &d).mod_coeffs(&m2);
        let t_new = zsub(&zsub(&t, &t.mul(&b)), &c.mul(&g_new)).mod_coeffs(&m2);
        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        m = m2;
    }
    (g.mod_coeffs(target), h.mod_coeffs(target))
}

fn zadd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.0.len().max(b.0.len());
    ZPoly(
        (0..n)
            .map(|i| {
                a.0.get(i).cloned().unwrap_or_else(BigInt::zero)
                    + b.0.get(i).cloned().unwrap_or_else(BigInt::zero)
            })
            .collect(),
    )
    .normalize()
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.0.len().max(b.0.len());
    ZPoly(
        (0..n)
            .map(|i| {
                a.0.get(i).cloned().unwrap_or_else(BigInt::zero)
                    - b.0.get(i).cloned().unwrap_or_else(BigInt::zero)
            })
            .collect(),
    )
    .normalize()
}

/// Division with remainder by a monic polynomial, coefficients mod m.
fn zdivrem_monic(a: &ZPoly, g: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    assert!(g.leading().is_one(), "divisor must be monic");
    let dd = g.degree();
    let mut rem = a.mod_coeffs(m).0;
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap().mod_floor(m);
        if !c.is_zero() {
            quot[k] = c.clone();
            for (i, b) in g.0.iter().enumerate() {
                let v = (&rem[k + i] - &c * b).mod_floor(m);
                rem[k + i] = v;
            }
        }
        rem.pop();
    }
    (ZPoly(quot).normalize(), ZPoly(rem).normalize().mod_coeffs(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "element not invertible modulo m");
    e.x.mod_floor(m)
}

/// Bezout coefficients s g + t h = 1 over F_p for coprime g, h, with
/// deg s < deg h and deg t < deg g.
fn bezout_mod_p(g: &ZPoly, h: &ZPoly, p: u64) -> (ZPoly, ZPoly) {
    let field = FieldSpec::Prime(p);
    let gp = g.to_mod_p(p);
    let hp = h.to_mod_p(p);
    let (mut r0, mut r1) = (gp.clone(), hp.clone());
    let (mut s0, mut s1) = (Polynomial::one(field), Polynomial::zero(field));
    let (mut t0, mut t1) = (Polynomial::zero(field), Polynomial::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let c = r0.coeff(0).inv().expect("inputs coprime mod p");
    let s = s0.scale(&c);
    let t = t0.scale(&c);
    let to_z = |q: &Polynomial| ZPoly(q.coeffs.iter().map(|x| x.to_ratio().0).collect()).normalize();
    (to_z(&s), to_z(&t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_x2_plus_1_over_f5() {
        // oracle: (x+2)(x+3) = x^2 + 5x + 6 = x^2 + 1 mod 5
        let f5 = FieldSpec::prime(5).unwrap();
        let f = Polynomial::from_i64(f5, &[1, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        let expected = [
            Polynomial::from_i64(f5, &[2, 1]),
            Polynomial::from_i64(f5, &[3, 1]),
        ];
        for e in &expected {
            assert!(fac.factors.iter().any(|(g, m)| g == e && *m == 1));
        }
        assert_eq!(fac.product(f5), f);
    }

    #[test]
    fn x2_minus_2_is_irreducible_over_q() {
        // rational-root candidates all fail; degree 2 means irreducible
        let q = FieldSpec::Rational;
        let f = Polynomial::from_i64(q, &[-2, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0], (f.clone(), 1));
    }

    #[test]
    fn x_squared_factors_with_multiplicity() {
        let q = FieldSpec::Rational;
        let f = Polynomial::from_i64(q, &[0, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(Polynomial::from_i64(q, &[0, 1]), 2)]);
    }

    #[test]
    fn cyclotomic_factorization_of_x12_minus_1() {
        // x^12 - 1 = prod of cyclotomics for d | 12: degrees 1,1,2,2,2,4
        let q = FieldSpec::Rational;
        let mut coeffs = vec![0i64; 13];
        coeffs[0] = -1;
        coeffs[12] = 1;
        let f = Polynomial::from_i64(q, &coeffs);
        let fac = factor(&f).unwrap();
        let mut degs: Vec<usize> = fac.factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 4]);
        assert_eq!(fac.product(q), f);
    }

    #[test]
    fn x4_plus_1_needs_recombination() {
        // irreducible over Q although it splits modulo every prime
        let q = FieldSpec::Rational;
        let f = Polynomial::from_i64(q, &[1, 0, 0, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(f.clone(), 1)]);
        // and a genuine product of two such quartics
        let g = Polynomial::from_i64(q, &[2, 0, 0, 0, 1]); // x^4 + 2
        let fg = f.mul(&g);
        let fac = factor(&fg).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.product(q), fg);
    }

    #[test]
    fn zassenhaus_on_product_of_quadratics() {
        // (x^2-2)(x^2-3)(x+1): one rational root, two irreducible quadratics
        let q = FieldSpec::Rational;
        let f = Polynomial::from_i64(q, &[-2, 0, 1])
            .mul(&Polynomial::from_i64(q, &[-3, 0, 1]))
            .mul(&Polynomial::from_i64(q, &[1, 1]));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 3);
        assert_eq!(fac.product(q), f);
    }

    #[test]
    fn non_monic_rational_factorization() {
        // 4x^2 - 1 = 4(x - 1/2)(x + 1/2)
        let q = FieldSpec::Rational;
        let f = Polynomial::from_i64(q, &[-1, 0, 4]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.unit, q.from_i64(4));
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.product(q), f);
    }

    #[test]
    fn berlekamp_on_quartics_over_f2() {
        let f2 = FieldSpec::prime(2).unwrap();
        // x^4 + x + 1 is irreducible over F_2
        let f = Polynomial::from_i64(f2, &[1, 1, 0, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 1);
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        let g = Polynomial::from_i64(f2, &[1, 0, 1, 0, 1]);
        let fac2 = factor(&g).unwrap();
        assert_eq!(fac2.factors, vec![(Polynomial::from_i64(f2, &[1, 1, 1]), 2)]);
    }

    #[test]
    fn squarefree_decomposition_char_p() {
        let f3 = FieldSpec::prime(3).unwrap();
        // (x+1)^3 = x^3 + 1 mod 3
        let f = Polynomial::from_i64(f3, &[1, 0, 0, 1]);
        let parts = squarefree_decomposition(&f).unwrap();
        assert_eq!(parts, vec![(Polynomial::from_i64(f3, &[1, 1]), 3)]);
    }

    #[test]
    fn factor_reassembles_random_products_mod_p() {
        for p in [2u64, 3, 5, 13] {
            let fp = FieldSpec::prime(p).unwrap();
            for seed in 0..12i64 {
                let a = Polynomial::from_i64(fp, &[seed % p as i64, 1 + seed % 2, 1]);
                let b = Polynomial::from_i64(fp, &[1, (seed / 2) % p as i64, 0, 1]);
                let f = a.mul(&b);
                let fac = factor(&f).unwrap();
                assert_eq!(fac.product(fp), f, "p={p} seed={seed}");
                for (g, _) in &fac.factors {
                    if g.degree().unwrap() > 1 {
                        for c in 0..p {
                            assert!(!g.eval(&fp.from_i64(c as i64)).is_zero());
                        }
                    }
                }
            }
        }
    }
}
