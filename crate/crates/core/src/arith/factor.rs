//! Factorisation of univariate rational polynomials (Zassenhaus): factor
//! modulo a small prime, Hensel-lift, recombine by trial division. Meant for
//! the low degrees that show up in resultants and edge polynomials.

use super::alg::poly_cmp;
use super::poly::{q_divrem, q_monic, q_trim, squarefree_decompose_q, QPoly, UniPoly};
use super::rational::Rational;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

type ZPoly = Vec<BigInt>;
type FpPoly = Vec<u64>;

/// Monic irreducible factors of `p` (with repetition), sorted by degree and
/// then by coefficients from the top down. Their product times the leading
/// coefficient of `p` is `p`.
pub fn factor_rational(p: &UniPoly) -> Vec<UniPoly> {
    let q = p.to_rationals().expect("factor_rational needs rational coefficients");
    factor_q(&q).into_iter().map(|f| UniPoly::from_rationals(&f)).collect()
}

pub fn factor_q(p: &[Rational]) -> Vec<QPoly> {
    let mut p = p.to_vec();
    q_trim(&mut p);
    assert!(!p.is_empty(), "cannot factor the zero polynomial");
    let mut out: Vec<QPoly> = Vec::new();
    for (f, m) in squarefree_decompose_q(&UniPoly::from_rationals(&p)) {
        let f = f.to_rationals().unwrap();
        for g in factor_squarefree_z(primitive_part(&f)) {
            let g = q_monic(&to_q(&g));
            for _ in 0..m {
                out.push(g.clone());
            }
        }
    }
    out.sort_by(|a, b| {
        let wa: Vec<_> = a.iter().cloned().map(super::alg::Alg::Rat).collect();
        let wb: Vec<_> = b.iter().cloned().map(super::alg::Alg::Rat).collect();
        poly_cmp(&wa, &wb)
    });
    out
}

fn to_q(z: &[BigInt]) -> QPoly {
    z.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

/// Integer polynomial with content 1 and positive leading coefficient.
fn primitive_part(q: &[Rational]) -> ZPoly {
    let den = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let z: ZPoly = q.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let content = z.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if z.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    z.iter().map(|c| c / &content * &sign).collect()
}

fn z_trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn factor_squarefree_z(f: ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    if f[0].is_zero() {
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_z(f[1..].to_vec()));
        return out;
    }
    let p = choose_prime(&f);
    let fp = reduce_fp(&f, p);
    let factors = factor_mod_p(&fp_monic(&fp, p), p);
    if factors.len() == 1 {
        return vec![f];
    }
    let lc = f.last().unwrap().abs();
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = (BigInt::one() << n) * norm1 * &lc * 2;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
    }
    let lifted = lift_all(&f, &factors, p, &modulus);
    recombine(f, lifted, &modulus)
}

fn choose_prime(f: &ZPoly) -> u64 {
    let lc = f.last().unwrap();
    let mut p = 3u64;
    loop {
        if is_prime(p) && !(lc % BigInt::from(p)).is_zero() {
            let fp = reduce_fp(f, p);
            let d = fp_derivative(&fp, p);
            if fp_gcd(&fp, &d, p).len() == 1 {
                return p;
            }
        }
        p += 2;
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), s) {
            let lc = f.last().unwrap().clone();
            let mut g: ZPoly = vec![lc];
            for &i in &subset {
                g = zm_mul(&g, &lifted[i], modulus);
            }
            let g: ZPoly = g.iter().map(|c| symmetric(c, modulus)).collect();
            let g = primitive_part(&to_q(&g));
            let (q, r) = q_divrem(&to_q(&f), &to_q(&g));
            if r.is_empty() {
                let mut nf: ZPoly = q.iter().map(|c| c.to_integer()).collect();
                z_trim(&mut nf);
                found = Some((subset, g, nf));
                break;
            }
        }
        match found {
            Some((subset, g, nf)) => {
                out.push(g);
                f = nf;
                let mut i = 0;
                lifted.retain(|_| {
                    let keep = !subset.contains(&i);
                    i += 1;
                    keep
                });
            }
            None => s += 1,
        }
    }
    if f.len() > 1 {
        out.push(primitive_part(&to_q(&f)));
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z/m.

fn zm_reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut r: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    z_trim(&mut r);
    r
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    zm_reduce(&r, m)
}

fn z_sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut r: ZPoly = (0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect();
    z_trim(&mut r);
    r
}

fn z_add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut r: ZPoly = (0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect();
    z_trim(&mut r);
    r
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "non-invertible leading coefficient");
    e.x.mod_floor(m)
}

/// Division by a monic `g` over Z/m.
fn zm_divrem_monic(a: &[BigInt], g: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let mut r = zm_reduce(a, m);
    let dg = g.len() - 1;
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - dg];
    while r.len() > dg {
        let c = r.pop().unwrap();
        let shift = r.len() - dg;
        for (i, gi) in g.iter().take(dg).enumerate() {
            r[shift + i] = (&r[shift + i] - &c * gi).mod_floor(m);
        }
        q[shift] = c;
        z_trim(&mut r);
    }
    z_trim(&mut q);
    (q, r)
}

fn to_z(a: &FpPoly) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ lc(f) * Π factors (mod p)` to monic factors modulo `modulus`.
fn lift_all(f: &ZPoly, factors: &[FpPoly], p: u64, modulus: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let inv = mod_inverse(f.last().unwrap(), modulus);
        let g: ZPoly = f.iter().map(|c| c * &inv).collect();
        return vec![zm_reduce(&g, modulus)];
    }
    let k = factors.len() / 2;
    let mut g: FpPoly = vec![1];
    for fac in &factors[..k] {
        g = fp_mul(&g, fac, p);
    }
    let (h, _) = fp_divrem(&reduce_fp(f, p), &g, p);
    let (g, h) = lift_pair(f, &g, &h, p, modulus);
    let mut out = lift_all(&g, &factors[..k], p, modulus);
    out.extend(lift_all(&h, &factors[k..], p, modulus));
    out
}

/// Linear Hensel lift of `f ≡ g h (mod p)` with `g` monic.
fn lift_pair(f: &ZPoly, g: &FpPoly, h: &FpPoly, p: u64, modulus: &BigInt) -> (ZPoly, ZPoly) {
    let (s, t) = fp_ext_gcd(g, h, p);
    let pb = BigInt::from(p);
    let mut g = to_z(g);
    let mut h = to_z(h);
    let mut m = pb.clone();
    while m < *modulus {
        let prod: ZPoly = {
            let mut r = vec![BigInt::zero(); g.len() + h.len() - 1];
            for (i, x) in g.iter().enumerate() {
                for (j, y) in h.iter().enumerate() {
                    r[i + j] += x * y;
                }
            }
            r
        };
        let diff = z_sub(f, &prod);
        let e: ZPoly = diff.iter().map(|c| c / &m).collect();
        let e = zm_reduce(&e, &pb);
        let te = zm_mul(&to_z(&t), &e, &pb);
        let (q, dg) = zm_divrem_monic(&te, &g, &pb);
        let dh = z_add(&zm_mul(&to_z(&s), &e, &pb), &zm_mul(&q, &h, &pb));
        let dh = zm_reduce(&dh, &pb);
        let step = |a: &ZPoly, d: &ZPoly| {
            let scaled: ZPoly = d.iter().map(|c| c * &m).collect();
            z_add(a, &scaled)
        };
        g = step(&g, &dg);
        h = step(&h, &dh);
        m *= &pb;
        g = zm_reduce(&g, &m);
        h = zm_reduce(&h, &m);
    }
    (zm_reduce(&g, modulus), zm_reduce(&h, modulus))
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for a small odd prime p.

fn reduce_fp(f: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    let mut r: FpPoly = f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    fp_trim(&mut r);
    r
}

fn fp_trim(a: &mut FpPoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn fp_sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut r: FpPoly = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    fp_trim(&mut r);
    r
}

fn fp_mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + mulmod(x, y, p)) % p;
        }
    }
    fp_trim(&mut r);
    r
}

fn fp_divrem(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let mut r = a.clone();
    fp_trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let inv = invmod(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let c = mulmod(*r.last().unwrap(), inv, p);
        let shift = r.len() - 1 - db;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mulmod(c, bi, p)) % p;
        }
        q[shift] = c;
        fp_trim(&mut r);
    }
    fp_trim(&mut q);
    (q, r)
}

fn fp_monic(a: &FpPoly, p: u64) -> FpPoly {
    let inv = invmod(*a.last().unwrap(), p);
    a.iter().map(|&c| mulmod(c, inv, p)).collect()
}

fn fp_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = fp_divrem(&a, &b, p);
        a = std::mem::replace(&mut b, r);
    }
    if a.is_empty() {
        a
    } else {
        fp_monic(&a, p)
    }
}

fn fp_derivative(a: &FpPoly, p: u64) -> FpPoly {
    let mut r: FpPoly = a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % p, p)).collect();
    fp_trim(&mut r);
    r
}

/// `(s, t)` with `s a + t b = 1` for coprime `a`, `b`.
fn fp_ext_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (FpPoly, FpPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "Hensel factors must be coprime");
    let inv = invmod(r0[0], p);
    let sc = |v: &FpPoly| v.iter().map(|&c| mulmod(c, inv, p)).collect::<FpPoly>();
    (sc(&s0), sc(&t0))
}

fn fp_powmod(base: &FpPoly, e: &BigUint, m: &FpPoly, p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1];
    let (_, b) = fp_divrem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = fp_divrem(&fp_mul(&acc, &acc, p), m, p).1;
        if e.bit(i) {
            acc = fp_divrem(&fp_mul(&acc, &b, p), m, p).1;
        }
    }
    acc
}

/// Monic irreducible factors of a monic squarefree `f` over F_p.
fn factor_mod_p(f: &FpPoly, p: u64) -> Vec<FpPoly> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: FpPoly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1;
    let mut rng = 0x9e37_79b9_7f4a_7c15u64;
    while f.len() > 2 * d {
        h = fp_powmod(&h, &BigUint::from(p), &f, p);
        let g = fp_gcd(&f, &fp_sub(&h, &x, p), p);
        if g.len() > 1 {
            equal_degree(&g, d, p, &mut rng, &mut out);
            f = fp_divrem(&f, &g, p).0;
            h = fp_divrem(&h, &f, p).1;
        }
        d += 1;
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

fn equal_degree(g: &FpPoly, d: usize, p: u64, rng: &mut u64, out: &mut Vec<FpPoly>) {
    if g.len() - 1 == d {
        out.push(g.clone());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: FpPoly = {
            let mut a: FpPoly = (0..g.len() - 1)
                .map(|_| {
                    *rng ^= *rng << 13;
                    *rng ^= *rng >> 7;
                    *rng ^= *rng << 17;
                    *rng % p
                })
                .collect();
            fp_trim(&mut a);
            a
        };
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, g, p), &vec![1], p);
        let h = fp_gcd(g, &b, p);
        if h.len() > 1 && h.len() < g.len() {
            equal_degree(&h, d, p, rng, out);
            equal_degree(&fp_divrem(g, &h, p).0, d, p, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::q_from_ints;

    fn fq(c: &[i64]) -> Vec<QPoly> {
        factor_q(&q_from_ints(c))
    }

    #[test]
    fn small_examples() {
        assert_eq!(fq(&[-2, 0, 1]), vec![q_from_ints(&[-2, 0, 1])]);
        assert_eq!(
            fq(&[-1, 0, 0, 0, 1]),
            vec![q_from_ints(&[-1, 1]), q_from_ints(&[1, 1]), q_from_ints(&[1, 0, 1])]
        );
        assert_eq!(
            fq(&[-1, -1, 0, 1, 1]),
            vec![q_from_ints(&[-1, 1]), q_from_ints(&[1, 1]), q_from_ints(&[1, 1, 1])]
        );
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits mod every prime.
        assert_eq!(fq(&[1, 0, -10, 0, 1]).len(), 1);
        // x^8 - 1
        assert_eq!(fq(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]).len(), 4);
    }

    #[test]
    fn repeated_and_non_monic() {
        // 4 (x - 1/2)^2 (x^2 + x + 1) x
        let p = crate::arith::poly::q_mul(
            &q_from_ints(&[1, -4, 4]),
            &q_from_ints(&[0, 1, 1, 1]),
        );
        let f = factor_q(&p);
        assert_eq!(f.len(), 4);
        assert_eq!(f[2], q_from_ints(&[0, 1]));
    }
}
