//! Krull–Schmidt decomposition by Fitting splitting of random endomorphisms,
//! and isomorphism testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::homology::{hom_basis, hom_dim};
use crate::linalg::{poly_roots, FpMatrix, Subspace};
use crate::module::{FDModule, ModMorphism};

/// Random endomorphism samples tried before giving up on a split.
const SPLIT_ATTEMPTS: usize = 48;
/// Random samples tried by [`is_isomorphic`] before the grid fallback.
const ISO_SAMPLES: usize = 64;
/// Largest grid searched by the deterministic fallback.
const ISO_GRID_LIMIT: u64 = 1 << 16;

fn trace(f: &ModMorphism) -> u32 {
    let p = f.source().prime();
    f.blocks()
        .iter()
        .fold(0, |acc, b| crate::linalg::add_mod(acc, b.trace(), p))
}

/// Rank of the trace form on `End(M)`, which is `dim End(M)/rad End(M)` when
/// the semisimple quotient is split.
pub fn end_semisimple_rank(m: &FDModule) -> Result<usize> {
    let basis = hom_basis(m, m)?;
    Ok(trace_form(&basis, m.prime()).rank())
}

fn trace_form(basis: &[ModMorphism], p: u32) -> FpMatrix {
    let n = basis.len();
    let mut g = FpMatrix::zeros(n, n, p);
    for i in 0..n {
        for j in i..n {
            let t = trace(&basis[i].then(&basis[j]).expect("endomorphisms"));
            g.set(i, j, t);
            g.set(j, i, t);
        }
    }
    g
}

/// The radical of `End(M)` for `M` with split local (or semisimple-split)
/// endomorphism ring: the kernel of the trace form.
pub(crate) fn end_radical(basis: &[ModMorphism], p: u32) -> Vec<ModMorphism> {
    if basis.is_empty() {
        return Vec::new();
    }
    let g = trace_form(basis, p);
    let ker = g.kernel_basis();
    let src = basis[0].source().clone();
    (0..ker.rows())
        .map(|r| ModMorphism::combination(&src, &src, basis, ker.row(r)))
        .collect()
}

fn random_combination(basis: &[ModMorphism], m: &FDModule, rng: &mut ChaCha8Rng) -> ModMorphism {
    let p = m.prime();
    let coeffs: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
    ModMorphism::combination(m, m, basis, &coeffs)
}

/// Splits `M = ker ψ ⊕ im ψ` with `ψ = (φ - λ)^d`, if that is a proper split.
fn fitting_split(
    m: &FDModule,
    phi: &ModMorphism,
    lambda: u32,
) -> Result<Option<(FDModule, FDModule)>> {
    let p = m.prime();
    let mut kers = Vec::new();
    let mut ims = Vec::new();
    for (v, blk) in phi.blocks().iter().enumerate() {
        let d = m.vertex_dim(v);
        let shifted = blk.sub(&FpMatrix::identity(d, p).scale(lambda));
        let psi = shifted.pow(d as u64);
        kers.push(Subspace::span(&psi.kernel_basis()));
        ims.push(Subspace::span(&psi));
    }
    let kd: usize = kers.iter().map(|s| s.dim()).sum();
    if kd == 0 || kd == m.dim() {
        return Ok(None);
    }
    let (k, _) = m.submodule(&kers)?;
    let (i, _) = m.submodule(&ims)?;
    Ok(Some((k, i)))
}

/// Tries to split `M` into two nonzero summands. `Ok(None)` means `M` is
/// indecomposable with `End(M)/rad = F_p`.
fn split_once(m: &FDModule, rng: &mut ChaCha8Rng) -> Result<Option<(FDModule, FDModule)>> {
    let basis = hom_basis(m, m)?;
    let rank = trace_form(&basis, m.prime()).rank();
    if rank <= 1 {
        return Ok(None);
    }
    let p = m.prime();
    let mut saw_partial_roots = false;
    for _ in 0..SPLIT_ATTEMPTS {
        let phi = random_combination(&basis, m, rng);
        for (v, blk) in phi.blocks().iter().enumerate() {
            if m.vertex_dim(v) == 0 {
                continue;
            }
            let cp = blk.charpoly();
            let roots = poly_roots(&cp, p);
            if roots.is_empty() {
                saw_partial_roots = true;
            }
            for lambda in roots {
                if let Some(split) = fitting_split(m, &phi, lambda)? {
                    return Ok(Some(split));
                }
            }
        }
    }
    if saw_partial_roots {
        Err(Error::ResidueExtension(rank))
    } else {
        Err(Error::DecompositionFailed(SPLIT_ATTEMPTS))
    }
}

/// Decomposes `M` into indecomposable summands, sorted by dimension vector.
pub fn decompose(m: &FDModule, seed: u64) -> Result<Vec<FDModule>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut todo = vec![m.clone()];
    let mut done = Vec::new();
    while let Some(x) = todo.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x, &mut rng)? {
            None => done.push(x),
            Some((a, b)) => {
                todo.push(a);
                todo.push(b);
            }
        }
    }
    done.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.dims().cmp(b.dims())));
    Ok(done)
}

/// True when `M` is nonzero and indecomposable (with split residue field).
pub fn is_indecomposable(m: &FDModule) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let basis = hom_basis(m, m)?;
    let rank = trace_form(&basis, m.prime()).rank();
    if rank == 1 {
        return Ok(true);
    }
    Ok(decompose(m, 0)?.len() == 1)
}

fn is_invertible(f: &ModMorphism) -> bool {
    f.blocks()
        .iter()
        .all(|b| b.is_square() && b.is_invertible())
}

/// Searches `Hom(M, N)` for an isomorphism.
pub fn find_isomorphism(m: &FDModule, n: &FDModule) -> Result<Option<ModMorphism>> {
    crate::module::same_algebra(m.algebra(), n.algebra())?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModMorphism::zero(m.clone(), n.clone())));
    }
    let basis = hom_basis(m, n)?;
    let e = hom_dim(m, m)?;
    if basis.len() != e || hom_dim(n, n)? != e {
        return Ok(None);
    }
    let p = m.prime();
    let mut rng = ChaCha8Rng::seed_from_u64(0x15_0f_15);
    for _ in 0..ISO_SAMPLES {
        let coeffs: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
        let f = ModMorphism::combination(m, n, &basis, &coeffs);
        if is_invertible(&f) {
            return Ok(Some(f));
        }
    }
    // det of a generic combination is a polynomial of degree dim M in the
    // coefficients; a grid with dim M + 1 values per coordinate certifies it.
    let side = (m.dim() as u64 + 1).min(p as u64);
    let cells = side
        .checked_pow(basis.len() as u32)
        .filter(|&c| c <= ISO_GRID_LIMIT);
    let Some(cells) = cells else {
        return Err(Error::Inconclusive);
    };
    for mut idx in 0..cells {
        let mut coeffs = Vec::with_capacity(basis.len());
        for _ in 0..basis.len() {
            coeffs.push((idx % side) as u32);
            idx /= side;
        }
        let f = ModMorphism::combination(m, n, &basis, &coeffs);
        if is_invertible(&f) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

pub fn is_isomorphic(m: &FDModule, n: &FDModule) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{replicated_algebra, vertex_index};
    use crate::linalg::DEFAULT_PRIME;
    use crate::module::{projective, regular_module, simple};
    use crate::quiver::Quiver;

    #[test]
    fn regular_module_of_duplicated_a3() {
        let a = replicated_algebra(&Quiver::linear_a(3), 1, DEFAULT_PRIME).unwrap();
        let parts = decompose(&regular_module(&a), 7).unwrap();
        let mut dims: Vec<usize> = parts.iter().map(|x| x.dim()).collect();
        dims.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(dims, [4, 4, 4, 3, 2, 1]);
    }

    #[test]
    fn doubled_projective_splits() {
        let a = replicated_algebra(&Quiver::linear_a(3), 0, DEFAULT_PRIME).unwrap();
        let p1 = projective(&a, 0);
        let parts = decompose(&p1.direct_sum(&p1).unwrap(), 1).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|x| is_isomorphic(x, &p1).unwrap()));
        assert_eq!(decompose(&p1, 3).unwrap().len(), 1);
    }

    #[test]
    fn isomorphism_examples() {
        let a = replicated_algebra(&Quiver::linear_a(3), 1, DEFAULT_PRIME).unwrap();
        let s1 = simple(&a, 0);
        assert!(is_isomorphic(&s1, &s1).unwrap());
        assert!(!is_isomorphic(&s1, &simple(&a, 1)).unwrap());
        let p = projective(&a, vertex_index(&a, 0, 1));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let change: Vec<FpMatrix> = (0..a.vertex_count())
            .map(|v| loop {
                let d = p.vertex_dim(v);
                let data = (0..d * d)
                    .map(|_| rng.gen_range(0..DEFAULT_PRIME))
                    .collect();
                let c = FpMatrix::from_vec(d, d, DEFAULT_PRIME, data).unwrap();
                if c.is_invertible() {
                    break c;
                }
            })
            .collect();
        let q = p.conjugate(&change).unwrap();
        q.validate().unwrap();
        assert!(is_isomorphic(&p, &q).unwrap());
    }
}
