use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{poly, Mat, Scalar, Subspace};

/// Wedderburn data of `A/J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedderburnBlocks {
    pub is_semisimple: bool,
    pub block_count: usize,
    pub block_dims: Vec<usize>,
}

const MAX_LIFT_STEPS: usize = 64;
const RANDOM_CANDIDATES: usize = 24;

fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

fn scale(s: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| s.mul(a)).collect()
}

impl Algebra {
    fn corner(&self, f: &[Scalar]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|b| self.mul(&self.mul(f, &self.basis_vec(b)), f))
            .collect();
        Subspace::span(self.field(), self.dim(), &vs)
    }

    /// Minimal polynomial of `y` inside a corner with identity `f`, lowest
    /// degree first and monic.
    fn corner_min_poly(&self, f: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let mut powers = vec![f.to_vec()];
        loop {
            let next = self.mul(powers.last().unwrap(), y);
            let m = Mat::from_rows(field, self.dim(), &powers).transpose();
            if let Some(c) = m.solve(&next) {
                let mut p: Vec<Scalar> = c.iter().map(Scalar::neg).collect();
                p.push(field.one());
                return p;
            }
            powers.push(next);
        }
    }

    /// A nontrivial idempotent of the corner `fAf` of a semisimple algebra,
    /// from the first candidate with an eigenvalue in k.
    fn split_corner(&self, f: &[Scalar], corner: &Subspace) -> Result<Option<Vec<Scalar>>> {
        let field = self.field();
        let basis = corner.basis_vectors();
        let mut cands: Vec<Vec<Scalar>> = basis.clone();
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                cands.push(self.mul(&basis[i], &basis[j]));
                if i < j {
                    cands.push(basis[i].iter().zip(&basis[j]).map(|(a, b)| a.add(b)).collect());
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x1de);
        for _ in 0..RANDOM_CANDIDATES {
            let mut v = vec![field.zero(); self.dim()];
            for b in &basis {
                let c = field.from_i64(rng.gen_range(-3..=3));
                v = v.iter().zip(b).map(|(x, y)| x.add(&c.mul(y))).collect();
            }
            cands.push(v);
        }
        for y in cands {
            let roots = poly::roots(field, &self.corner_min_poly(f, &y))
                .ok_or_else(|| Error::NonSplit("eigenvalue search not attempted for this field".into()))?;
            for lambda in roots {
                let u = sub(&y, &scale(&lambda, f));
                if is_zero(&u) {
                    continue;
                }
                // u is a zero divisor of a semisimple algebra, hence von Neumann
                // regular: u w u = u has a solution and w u is idempotent.
                let cols: Vec<Vec<Scalar>> = (0..self.dim())
                    .map(|b| self.mul(&self.mul(&u, &self.basis_vec(b)), &u))
                    .collect();
                let m = Mat::from_rows(field, self.dim(), &cols).transpose();
                let w = m
                    .solve(&u)
                    .ok_or_else(|| Error::Internal("zero divisor of a semisimple algebra is not regular".into()))?;
                let w = self.mul(&self.mul(f, &w), f);
                let e = self.mul(&w, &u);
                if !is_zero(&e) && e != f {
                    return Ok(Some(e));
                }
            }
        }
        Ok(None)
    }

    /// Complete set of primitive orthogonal idempotents of a semisimple algebra.
    fn semisimple_idempotents(&self) -> Result<Vec<Vec<Scalar>>> {
        let mut done = Vec::new();
        let mut todo = vec![self.unit().to_vec()];
        while let Some(f) = todo.pop() {
            if is_zero(&f) {
                continue;
            }
            let corner = self.corner(&f);
            if corner.dim() == 1 {
                done.push(f);
                continue;
            }
            match self.split_corner(&f, &corner)? {
                Some(e) => {
                    todo.push(sub(&f, &e));
                    todo.push(e);
                }
                None => {
                    return Err(Error::NonSplit(format!(
                        "no element of a {}-dimensional corner has an eigenvalue in {}",
                        corner.dim(),
                        self.field()
                    )))
                }
            }
        }
        // Fixed order: by the first nonzero coordinate.
        done.sort_by_key(|e| e.iter().position(|c| !c.is_zero()));
        Ok(done)
    }

    fn lift_idempotent(&self, x: Vec<Scalar>) -> Result<Vec<Scalar>> {
        let three = self.field().from_i64(3);
        let two = self.field().from_i64(2);
        let mut e = x;
        for _ in 0..MAX_LIFT_STEPS {
            let e2 = self.mul(&e, &e);
            if e2 == e {
                return Ok(e);
            }
            let e3 = self.mul(&e2, &e);
            e = sub(&scale(&three, &e2), &scale(&two, &e3));
        }
        Err(Error::Internal("idempotent lifting did not converge".into()))
    }

    /// A complete set of primitive orthogonal idempotents summing to 1.
    pub fn primitive_idempotents(&self) -> Result<Vec<Vec<Scalar>>> {
        self.cache
            .idempotents
            .get_or_init(|| self.compute_idempotents())
            .clone()
    }

    fn compute_idempotents(&self) -> Result<Vec<Vec<Scalar>>> {
        let j = self.radical()?;
        let free = j.free_columns();
        let bar = self.quotient_by(&j);
        let hats = bar.semisimple_idempotents()?;
        let embed = |v: &[Scalar]| {
            let mut out = self.zero_vec();
            for (i, &c) in free.iter().enumerate() {
                out[c] = v[i].clone();
            }
            out
        };
        let mut rest = self.unit().to_vec();
        let mut out = Vec::with_capacity(hats.len());
        for (i, h) in hats.iter().enumerate() {
            if i + 1 == hats.len() {
                out.push(rest.clone());
                break;
            }
            let x = self.mul(&self.mul(&rest, &embed(h)), &rest);
            let e = self.lift_idempotent(x)?;
            rest = sub(&rest, &e);
            out.push(e);
        }
        Ok(out)
    }

    /// Wedderburn block data of `A/J`.
    pub fn wedderburn_blocks(&self) -> Result<WedderburnBlocks> {
        let j = self.radical()?;
        let bar = self.quotient_by(&j);
        let es = bar.semisimple_idempotents()?;
        let k = es.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            p[i] = r;
            r
        }
        for a in 0..k {
            for b in 0..k {
                if a != b && !bar.mul_corner(&es[a], &es[b]).is_zero() {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut sums: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..k {
            let r = find(&mut parent, i);
            match roots.iter().position(|&x| x == r) {
                Some(p) => sums[p] = sums[p].iter().zip(&es[i]).map(|(a, b)| a.add(b)).collect(),
                None => {
                    roots.push(r);
                    sums.push(es[i].clone());
                }
            }
        }
        let block_dims: Vec<usize> = sums.iter().map(|e| bar.corner(e).dim()).collect();
        Ok(WedderburnBlocks {
            is_semisimple: j.is_zero(),
            block_count: block_dims.len(),
            block_dims,
        })
    }

    /// `eAf` as a subspace.
    pub(crate) fn mul_corner(&self, e: &[Scalar], f: &[Scalar]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|b| self.mul(&self.mul(e, &self.basis_vec(b)), f))
            .collect();
        Subspace::span(self.field(), self.dim(), &vs)
    }

    /// Simple ⟺ semisimple with a single Wedderburn block; for artinian
    /// algebras this is also primeness.
    pub fn is_simple(&self) -> Result<bool> {
        let w = self.wedderburn_blocks()?;
        Ok(w.is_semisimple && w.block_count == 1)
    }
}
