//! Random instance generators and independent reference computations shared
//! by the integration tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tgrs::{CaseTag, Embedding, Field, FieldElement, Poly, TgrsCode};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Odd prime powers up to 200.
pub fn small_orders() -> Vec<u64> {
    (3..=200u64)
        .step_by(2)
        .filter(|&q| {
            let p = (3..=q).find(|p| q % p == 0).unwrap();
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            r == 1
        })
        .collect()
}

pub fn field_of_order(q: u64) -> Field {
    let p = (3..=q).find(|p| q.is_multiple_of(*p)).unwrap();
    let mut s = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        s += 1;
    }
    Field::new(p, s).unwrap()
}

pub fn random_nonzero(rng: &mut ChaCha8Rng, f: &Field) -> FieldElement {
    f.from_index(rng.gen_range(1..f.order()))
}

pub fn distinct_points(rng: &mut ChaCha8Rng, f: &Field, n: usize) -> Vec<FieldElement> {
    let mut idx: Vec<u64> = (0..f.order()).collect();
    idx.shuffle(rng);
    idx[..n].iter().map(|&i| f.from_index(i)).collect()
}

pub fn sum(xs: &[FieldElement]) -> FieldElement {
    xs.iter().cloned().sum()
}

/// Distinct points with the requested sum property and a twist giving the
/// requested case.
pub fn points_and_twist(
    rng: &mut ChaCha8Rng,
    f: &Field,
    n: usize,
    want: CaseTag,
) -> (Vec<FieldElement>, FieldElement) {
    try_points_and_twist(rng, f, n, want).expect("no admissible points for this case")
}

/// As [`points_and_twist`], giving up after a few hundred draws (some
/// small fields admit no such points, e.g. all of F_3 sums to zero).
pub fn try_points_and_twist(
    rng: &mut ChaCha8Rng,
    f: &Field,
    n: usize,
    want: CaseTag,
) -> Option<(Vec<FieldElement>, FieldElement)> {
    for _ in 0..500 {
        let mut alpha = distinct_points(rng, f, n);
        if want == CaseTag::ZeroSum {
            let rest = sum(&alpha[..n - 1]);
            alpha[n - 1] = -rest;
            if alpha[..n - 1].contains(&alpha[n - 1]) {
                continue;
            }
        }
        let a = sum(&alpha);
        let eta = match want {
            CaseTag::ZeroSum => random_nonzero(rng, f),
            CaseTag::Singular if a.is_zero() => continue,
            CaseTag::Singular => -a.inv().unwrap(),
            CaseTag::Generic if a.is_zero() => continue,
            CaseTag::Generic => {
                let eta = random_nonzero(rng, f);
                if (f.one() + &a * &eta).is_zero() {
                    continue;
                }
                eta
            }
        };
        return Some((alpha, eta));
    }
    None
}

/// A random code over a field of order at most `max_q`.
pub fn random_code(rng: &mut ChaCha8Rng, max_q: u64, max_n: usize, want: CaseTag) -> TgrsCode {
    let orders: Vec<u64> = small_orders().into_iter().filter(|&q| q <= max_q).collect();
    loop {
        let q = *orders.choose(rng).unwrap();
        let f = field_of_order(q);
        let top = max_n.min(q as usize);
        if top < 2 || (want == CaseTag::ZeroSum && top < 3) {
            continue;
        }
        let n = rng.gen_range(2..=top);
        let k = rng.gen_range(1..=n / 2);
        let Some((alpha, eta)) = try_points_and_twist(rng, &f, n, want) else {
            continue;
        };
        let v = (0..n).map(|_| random_nonzero(rng, &f)).collect();
        return TgrsCode::new(&f, alpha, v, k, eta).unwrap();
    }
}

/// `1 / m'(alpha_i)` with `m = prod (x - alpha_j)`, via polynomial algebra.
pub fn weights_by_derivative(alpha: &[FieldElement]) -> Vec<FieldElement> {
    let f = alpha[0].field();
    let dm = Poly::from_roots(f, alpha).derivative();
    alpha
        .iter()
        .map(|a| dm.eval(a).unwrap().inv().unwrap())
        .collect()
}

/// `G G^T` computed entrywise, without the matrix module.
pub fn gram_is_zero(code: &TgrsCode) -> bool {
    let g = code.generator_matrix();
    let f = code.field();
    (0..g.rows()).all(|r| {
        (0..g.rows()).all(|s| {
            (0..g.cols())
                .fold(f.zero(), |acc, c| acc + g.get(r, c) * g.get(s, c))
                .is_zero()
        })
    })
}

/// Half-rate code over `F_(q^2)` with `v_i = sqrt(u_i)`, i.e. `lambda = 1`,
/// from base-field points and twist.
pub fn half_rate_with_square_weights(
    base: &Field,
    alpha: &[FieldElement],
    eta: &FieldElement,
) -> TgrsCode {
    let ext = Field::new(base.characteristic(), 2 * base.degree()).unwrap();
    let emb = Embedding::new(base, &ext).unwrap();
    let u = weights_by_derivative(alpha);
    let v = u
        .iter()
        .map(|ui| ext.sqrt(&emb.apply(ui).unwrap()).unwrap())
        .collect();
    let alpha_ext = alpha.iter().map(|a| emb.apply(a).unwrap()).collect();
    TgrsCode::new(&ext, alpha_ext, v, alpha.len() / 2, emb.apply(eta).unwrap()).unwrap()
}

/// Minimum nonzero weight over all `q^k` codewords.
pub fn min_weight_exhaustive(code: &TgrsCode) -> usize {
    let f = code.field();
    let q = f.order();
    let k = code.k();
    let mut best = code.n();
    for m in 1..q.pow(k as u32) {
        let mut r = m;
        let coeffs: Vec<_> = (0..k)
            .map(|_| {
                let c = f.from_index(r % q);
                r /= q;
                c
            })
            .collect();
        let w = code
            .twisted_eval(&coeffs)
            .unwrap()
            .iter()
            .filter(|x| !x.is_zero())
            .count();
        best = best.min(w);
    }
    best
}
