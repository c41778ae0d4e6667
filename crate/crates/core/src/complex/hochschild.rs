use super::asc::AscComplex;
use crate::error::Result;
use crate::linalg::{tensor_permutation, Mat};
use crate::structure::Bimodule;

/// Which standard Hochschild complex to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HochschildVariant {
    /// `Hom(A^{⊗s}, M)`, degrees `0..=max+1`.
    Cochain,
    /// `M ⊗ A^{⊗s}` with the `b` differential, stored in degrees `−(max+1)..=0`.
    Chain,
}

/// Standard Hochschild complex of `m` over its algebra.
pub fn hochschild_complex(m: &Bimodule, max_degree: usize, variant: HochschildVariant) -> Result<AscComplex> {
    match variant {
        HochschildVariant::Cochain => cochain_complex(m, max_degree),
        HochschildVariant::Chain => chain_complex(m, max_degree),
    }
}

/// `δf = L(1⊗f) + Σ_{i=1}^{s} (−1)^i f∘μ_i + (−1)^{s+1} R(f⊗1)`, with a cochain
/// `f: A^{⊗s} → M` flattened row-major as an `m × d^s` matrix.
fn cochain_complex(m: &Bimodule, max_degree: usize) -> Result<AscComplex> {
    let a = m.over();
    let f = a.field();
    let (d, dm) = (a.dim(), m.dim());
    let id = |k: usize| Mat::identity(f, k);
    let top = max_degree + 1;
    let spaces: Vec<usize> = (0..=top).map(|s| dm * d.pow(s as u32)).collect();
    let mut diffs = Vec::with_capacity(top);
    for s in 0..top {
        let ds = d.pow(s as u32);
        // vec(X·F·Y) = (X ⊗ Yᵗ)·vec(F) for row-major flattening
        // L(1⊗f) = L·(I_d ⊗ f): vec = Σ_a (L_a ⊗ E_aᵗ-block) assembled below
        let mut diff = Mat::zeros(f, dm * d * ds, dm * ds);
        let l = m.left_act();
        let r = m.right_act();
        for x in 0..dm {
            for u in 0..ds {
                let col = x * ds + u;
                // left: (1⊗f)(e_a ⊗ e_u) = e_a ⊗ f(e_u) = Σ_x f[x,u] e_a⊗e_x ↦ L[:, a·m + x]
                for a_idx in 0..d {
                    for y in 0..dm {
                        let v = l.get(y, a_idx * dm + x);
                        if !v.is_zero() {
                            diff.add_at(y * d * ds + a_idx * ds + u, col, v);
                        }
                    }
                }
                // right: (f⊗1)(e_u ⊗ e_b) = f(e_u) ⊗ e_b ↦ R[:, x·d + b]
                for b in 0..d {
                    for y in 0..dm {
                        let v = r.get(y, x * d + b);
                        if !v.is_zero() {
                            let v = if s % 2 == 0 { -v } else { v.clone() };
                            diff.add_at(y * d * ds + u * d + b, col, &v);
                        }
                    }
                }
            }
        }
        for i in 1..=s {
            // f ↦ f∘(1^{i−1} ⊗ μ ⊗ 1^{s−i})
            let mu = id(d.pow(i as u32 - 1)).kron(&a.mul().kron(&id(d.pow((s - i) as u32)))?)?;
            let term = id(dm).kron(&mu.transpose())?;
            diff = if i % 2 == 0 { diff.try_add(&term)? } else { diff.try_sub(&term)? };
        }
        diffs.push(diff);
    }
    AscComplex::new(f, 0, spaces, diffs)
}

/// `b(x⊗a₁⊗…⊗a_s) = x·a₁ ⊗ … + Σ_{i=1}^{s−1} (−1)^i x ⊗ … a_i a_{i+1} … + (−1)^s a_s·x ⊗ …`.
///
/// Chain degree `s` is stored at ascending degree `−s`.
fn chain_complex(m: &Bimodule, max_degree: usize) -> Result<AscComplex> {
    let a = m.over();
    let f = a.field();
    let (d, dm) = (a.dim(), m.dim());
    let id = |k: usize| Mat::identity(f, k);
    let top = max_degree + 1;
    // b_s: degree s → s−1 for s = 1..=top
    let mut b = Vec::with_capacity(top);
    for s in 1..=top {
        let rest = d.pow(s as u32 - 1);
        let mut map = m.right_act().kron(&id(rest))?;
        for i in 1..s {
            let inner = id(dm * d.pow(i as u32 - 1)).kron(&a.mul().kron(&id(d.pow((s - i - 1) as u32)))?)?;
            map = if i % 2 == 0 { map.try_add(&inner)? } else { map.try_sub(&inner)? };
        }
        // move a_s to the front, then act on the left
        let rotate = tensor_permutation(f, &[dm, rest, d], &[2, 0, 1]);
        let last = &m.left_act().kron(&id(rest))? * &rotate;
        map = if s % 2 == 0 { map.try_add(&last)? } else { map.try_sub(&last)? };
        b.push(map);
    }
    let spaces: Vec<usize> = (0..=top).rev().map(|s| dm * d.pow(s as u32)).collect();
    let diffs: Vec<Mat> = b.into_iter().rev().collect();
    AscComplex::new(f, -(top as i64), spaces, diffs)
}
