use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Mat, Scalar, SparseSystem, Subspace};
use crate::exec::{self, Execution};

/// Largest `q^(2·dim)` for which [`radical_by_enumeration`] runs.
const ENUMERATION_LIMIT: u64 = 1 << 20;

impl Algebra {
    /// Jacobson radical.
    ///
    /// Uses the trace form `(x, y) ↦ tr(L_{xy})` when the characteristic is 0
    /// or exceeds the dimension. Otherwise the trace form is refined by the
    /// integer-lifted traces `tr(L̃^{p^i}) / p^i mod p`, `p^i ≤ dim`, of the
    /// left regular representation (Cohen, Ivanyos and Wales).
    pub fn radical(&self) -> Result<Subspace> {
        self.cache
            .radical
            .get_or_init(|| self.compute_radical(Execution::default()))
            .clone()
    }

    pub(crate) fn compute_radical(&self, exec: Execution) -> Result<Subspace> {
        let n = self.dim();
        let p = self.field().characteristic();
        if p == 0 || p > n as u64 {
            return Ok(self.trace_form_radical());
        }
        Ok(self.lifted_trace_radical(p, exec))
    }

    fn lifted_trace_radical(&self, p: u64, exec: Execution) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let mut ideal = Subspace::full(f, n);
        let mut power = 1u64;
        let mut i = 0u32;
        while power <= n as u64 && !ideal.is_zero() {
            let us = ideal.basis_vectors();
            let modulus = power * p;
            let pairs: Vec<(usize, usize)> =
                (0..us.len()).flat_map(|k| (0..n).map(move |j| (k, j))).collect();
            let values = exec::map(exec, &pairs, |&(k, j)| {
                let l = self.left_mult(&self.mul(&us[k], &self.basis_vec(j)));
                let t = lifted_power_trace(&l, i, p, modulus);
                debug_assert_eq!(t % power, 0);
                t / power
            });
            // g[j][k] = g_i(u_k b_j); the next ideal is {Σ c_k u_k : g·c = 0}.
            let mut g = Mat::zeros(f, n, us.len());
            for (&(k, j), v) in pairs.iter().zip(values) {
                g[(j, k)] = f.element(v);
            }
            let kept: Vec<Vec<Scalar>> = kernel_basis(&g)
                .basis_vectors()
                .iter()
                .map(|c| {
                    c.iter().zip(&us).fold(self.zero_vec(), |acc, (ck, u)| {
                        acc.iter().zip(u).map(|(a, b)| a.add(&ck.mul(b))).collect()
                    })
                })
                .collect();
            ideal = Subspace::span(f, n, &kept);
            power *= p;
            i += 1;
        }
        ideal
    }

    fn trace_form_radical(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let traces: Vec<Scalar> = (0..n)
            .map(|c| {
                (0..n).fold(f.zero(), |acc, b| {
                    match self.product(c, b).iter().find(|(k, _)| *k == b) {
                        Some((_, v)) => acc.add(v),
                        None => acc,
                    }
                })
            })
            .collect();
        // G[y][x] = tr(L_{x y}); J is the set of x with G·x = 0.
        let mut g = Mat::zeros(f, n, n);
        for x in 0..n {
            for y in 0..n {
                let t = self
                    .product(x, y)
                    .iter()
                    .fold(f.zero(), |acc, (c, v)| acc.add(&v.mul(&traces[*c])));
                g[(y, x)] = t;
            }
        }
        kernel_basis(&g)
    }

    pub(crate) fn enumerated_radical(&self, exec: Execution) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let q = f.order().unwrap();
        let total = q.pow(n as u32) as usize;
        let element = |mut i: usize| -> Vec<Scalar> {
            (0..n)
                .map(|_| {
                    let d = i % q as usize;
                    i /= q as usize;
                    f.element(d as u64)
                })
                .collect()
        };
        let all: Vec<Vec<Scalar>> = (0..total).map(element).collect();
        let members: Vec<Option<Vec<Scalar>>> = exec::map(exec, &all, |x| {
            all.iter()
                .all(|y| self.is_nilpotent(&self.mul(y, x)))
                .then(|| x.clone())
        });
        let members: Vec<Vec<Scalar>> = members.into_iter().flatten().collect();
        Subspace::span(f, n, &members)
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.is_zero())
    }

    /// `{x : xb = bx for every basis element b}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let mut sys = SparseSystem::new(f, n);
        for b in 0..n {
            for c in 0..n {
                let mut eq = Vec::new();
                for a in 0..n {
                    if let Some((_, v)) = self.product(a, b).iter().find(|e| e.0 == c) {
                        eq.push((a, v.clone()));
                    }
                    if let Some((_, v)) = self.product(b, a).iter().find(|e| e.0 == c) {
                        eq.push((a, v.neg()));
                    }
                }
                sys.add_equation(eq);
            }
        }
        sys.kernel()
    }

    /// The quotient by a two-sided ideal, on the complement basis given by the
    /// ideal's free columns.
    pub fn quotient_by(&self, ideal: &Subspace) -> Algebra {
        let f = self.field();
        let free = ideal.free_columns();
        let mut entries = Vec::new();
        for (i, &a) in free.iter().enumerate() {
            for (j, &b) in free.iter().enumerate() {
                let p = self.mul(&self.basis_vec(a), &self.basis_vec(b));
                for (k, v) in ideal.quotient_coords(&p).into_iter().enumerate() {
                    if !v.is_zero() {
                        entries.push((i, j, k, v));
                    }
                }
            }
        }
        let labels = free.iter().map(|&a| self.labels()[a].clone()).collect();
        Algebra::new(f, labels, entries, ideal.quotient_coords(self.unit())).unwrap()
    }

    /// Whether `s` is a two-sided ideal.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim();
        s.basis_vectors().iter().all(|x| {
            (0..n).all(|b| {
                let e = self.basis_vec(b);
                s.contains(&self.mul(x, &e)) && s.contains(&self.mul(&e, x))
            })
        })
    }
}

/// `tr(L̃^{p^i}) mod modulus` for the lift `L̃` of `l` with entries in `[0, p)`.
fn lifted_power_trace(l: &Mat, i: u32, p: u64, modulus: u64) -> u64 {
    let n = l.rows();
    let m = modulus as u128;
    let mut x: Vec<u128> = (0..n * n)
        .map(|e| l[(e / n, e % n)].residue().expect("prime field") as u128)
        .collect();
    for _ in 0..i {
        x = pow_mod(&x, n, p, m);
    }
    let t = (0..n).fold(0u128, |acc, d| (acc + x[d * n + d]) % m);
    t as u64
}

fn pow_mod(x: &[u128], n: usize, e: u64, m: u128) -> Vec<u128> {
    let mut acc: Vec<u128> = (0..n * n).map(|k| u128::from(k / n == k % n)).collect();
    let mut base = x.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &base, n, m);
        }
        e >>= 1;
        if e > 0 {
            base = mul_mod(&base, &base, n, m);
        }
    }
    acc
}

fn mul_mod(x: &[u128], y: &[u128], n: usize, m: u128) -> Vec<u128> {
    let mut out = vec![0u128; n * n];
    for r in 0..n {
        for k in 0..n {
            let a = x[r * n + k];
            if a == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += a * y[k * n + c];
            }
        }
        for c in 0..n {
            out[r * n + c] %= m;
        }
    }
    out
}

/// The radical as `{x : yx nilpotent for all y}`, by enumerating a finite
/// field algebra. Reference implementation for tests and benches.
pub fn radical_by_enumeration(a: &Algebra, exec: Execution) -> Result<Subspace> {
    match a.field().order() {
        Some(q) if (q as f64).powi(2 * a.dim() as i32) <= ENUMERATION_LIMIT as f64 => {
            Ok(a.enumerated_radical(exec))
        }
        Some(_) => Err(Error::TooLarge(format!("{} elements to enumerate", a.dim()))),
        None => Err(Error::TooLarge("enumeration needs a finite field".into())),
    }
}
