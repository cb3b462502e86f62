//! Minimal approximations by `add T`, faithfulness, `Gen` and `Cogen`.

use crate::decompose::{decompose, end_radical, is_isomorphic};
use crate::error::{Error, Result};
use crate::homology::hom_basis;
use crate::linalg::{FpMatrix, Subspace};
use crate::module::{FDModule, ModMorphism};

/// `add T` for a basic list of pairwise non-isomorphic indecomposables,
/// with bases of the radical morphism spaces `rad(T_j, T_k)`.
#[derive(Clone, Debug)]
pub struct AddCategory {
    summands: Vec<FDModule>,
    rad: Vec<Vec<Vec<ModMorphism>>>,
}

impl AddCategory {
    /// The summands must be indecomposable and pairwise non-isomorphic.
    pub fn new(summands: Vec<FDModule>) -> Result<Self> {
        let n = summands.len();
        let mut rad = vec![vec![Vec::new(); n]; n];
        for j in 0..n {
            for k in 0..n {
                let basis = hom_basis(&summands[j], &summands[k])?;
                rad[j][k] = if j == k {
                    let r = end_radical(&basis, summands[j].prime());
                    if r.len() + 1 != basis.len() {
                        return Err(Error::Precondition(format!(
                            "summand {j} is not indecomposable with split residue field"
                        )));
                    }
                    r
                } else {
                    basis
                };
            }
        }
        Ok(AddCategory { summands, rad })
    }

    /// `add T` from an arbitrary module, via decomposition and deduplication.
    pub fn from_module(t: &FDModule, seed: u64) -> Result<Self> {
        let mut basic: Vec<FDModule> = Vec::new();
        for x in decompose(t, seed)? {
            let mut seen = false;
            for y in &basic {
                if is_isomorphic(&x, y)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                basic.push(x);
            }
        }
        AddCategory::new(basic)
    }

    pub fn summands(&self) -> &[FDModule] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn module(&self) -> Result<FDModule> {
        let alg = self
            .summands
            .first()
            .map(|s| s.algebra().clone())
            .ok_or_else(|| {
                Error::Precondition("empty add category has no ambient algebra".into())
            })?;
        FDModule::direct_sum_all(&alg, &self.summands)
    }
}

/// A minimal approximation together with the multiplicity of each summand of
/// `T` in the approximating module and the component maps.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: ModMorphism,
    pub multiplicities: Vec<usize>,
    /// `(summand index, component)` for each copy, in the order of the direct sum.
    pub components: Vec<(usize, ModMorphism)>,
}

/// Keeps the maps that are independent modulo `radical`, i.e. a basis of a
/// complement of `radical` in the span of `maps`.
fn independent_mod(
    maps: Vec<ModMorphism>,
    radical: &[ModMorphism],
    len: usize,
    p: u32,
) -> Vec<ModMorphism> {
    let mut rows = FpMatrix::zeros(radical.len(), len, p);
    for (r, f) in radical.iter().enumerate() {
        rows.row_mut(r).copy_from_slice(&f.flatten());
    }
    let mut span = Subspace::span(&rows);
    let mut chosen = Vec::new();
    for f in maps {
        let flat = f.flatten();
        if !span.contains(&flat) {
            span = span.sum(&Subspace::span(
                &FpMatrix::from_vec(1, len, p, flat).expect("row"),
            ));
            chosen.push(f);
        }
    }
    chosen
}

fn morphism_len(a: &FDModule, b: &FDModule) -> usize {
    (0..a.algebra().vertex_count())
        .map(|v| a.vertex_dim(v) * b.vertex_dim(v))
        .sum()
}

/// Minimal right `add T`-approximation `T' → X`.
pub fn minimal_right_approx(x: &FDModule, add: &AddCategory) -> Result<Approximation> {
    let p = x.prime();
    let homs: Vec<Vec<ModMorphism>> = add
        .summands
        .iter()
        .map(|t| hom_basis(t, x))
        .collect::<Result<_>>()?;
    let mut components = Vec::new();
    let mut multiplicities = Vec::with_capacity(add.len());
    for (j, tj) in add.summands.iter().enumerate() {
        let mut radical = Vec::new();
        for (k, hk) in homs.iter().enumerate() {
            for psi in &add.rad[j][k] {
                for h in hk {
                    radical.push(psi.then(h)?);
                }
            }
        }
        let chosen = independent_mod(homs[j].clone(), &radical, morphism_len(tj, x), p);
        multiplicities.push(chosen.len());
        components.extend(chosen.into_iter().map(|h| (j, h)));
    }
    let alg = x.algebra();
    let parts: Vec<FDModule> = components
        .iter()
        .map(|(j, _)| add.summands[*j].clone())
        .collect();
    let src = FDModule::direct_sum_all(alg, &parts)?;
    let blocks = (0..alg.vertex_count())
        .map(|v| {
            components
                .iter()
                .fold(FpMatrix::zeros(0, x.vertex_dim(v), p), |acc, (_, h)| {
                    acc.vstack(h.block(v))
                })
        })
        .collect();
    let map = ModMorphism::from_parts(src, x.clone(), blocks);
    Ok(Approximation {
        map,
        multiplicities,
        components,
    })
}

/// Minimal left `add T`-approximation `X → T'`.
pub fn minimal_left_approx(x: &FDModule, add: &AddCategory) -> Result<Approximation> {
    let p = x.prime();
    let homs: Vec<Vec<ModMorphism>> = add
        .summands
        .iter()
        .map(|t| hom_basis(x, t))
        .collect::<Result<_>>()?;
    let mut components = Vec::new();
    let mut multiplicities = Vec::with_capacity(add.len());
    for (j, tj) in add.summands.iter().enumerate() {
        let mut radical = Vec::new();
        for (k, hk) in homs.iter().enumerate() {
            for psi in &add.rad[k][j] {
                for h in hk {
                    radical.push(h.then(psi)?);
                }
            }
        }
        let chosen = independent_mod(homs[j].clone(), &radical, morphism_len(x, tj), p);
        multiplicities.push(chosen.len());
        components.extend(chosen.into_iter().map(|h| (j, h)));
    }
    let alg = x.algebra();
    let parts: Vec<FDModule> = components
        .iter()
        .map(|(j, _)| add.summands[*j].clone())
        .collect();
    let tgt = FDModule::direct_sum_all(alg, &parts)?;
    let blocks = (0..alg.vertex_count())
        .map(|v| {
            components
                .iter()
                .fold(FpMatrix::zeros(x.vertex_dim(v), 0, p), |acc, (_, h)| {
                    acc.hstack(h.block(v))
                })
        })
        .collect();
    let map = ModMorphism::from_parts(x.clone(), tgt, blocks);
    Ok(Approximation {
        map,
        multiplicities,
        components,
    })
}

/// True if every map `T_j → X` factors through `g: T' → X`.
pub fn is_right_approximation(g: &ModMorphism, add: &AddCategory) -> Result<bool> {
    let x = g.target();
    for t in &add.summands {
        let want = hom_basis(t, x)?.len();
        let through = hom_basis(t, g.source())?;
        let len = morphism_len(t, x);
        let mut rows = FpMatrix::zeros(through.len(), len, x.prime());
        for (r, phi) in through.iter().enumerate() {
            rows.row_mut(r).copy_from_slice(&phi.then(g)?.flatten());
        }
        if rows.rank() != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True if every map `X → T_j` factors through `f: X → T'`.
pub fn is_left_approximation(f: &ModMorphism, add: &AddCategory) -> Result<bool> {
    let x = f.source();
    for t in &add.summands {
        let want = hom_basis(x, t)?.len();
        let through = hom_basis(f.target(), t)?;
        let len = morphism_len(x, t);
        let mut rows = FpMatrix::zeros(through.len(), len, x.prime());
        for (r, phi) in through.iter().enumerate() {
            rows.row_mut(r).copy_from_slice(&f.then(phi)?.flatten());
        }
        if rows.rank() != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Faithful: no nonzero algebra element annihilates `M`.
pub fn is_faithful(m: &FDModule) -> bool {
    let alg = m.algebra();
    let nv = alg.vertex_count();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); nv * nv];
    for b in 0..alg.dim() {
        groups[alg.left(b) * nv + alg.right(b)].push(b);
    }
    groups.iter().all(|grp| {
        if grp.is_empty() {
            return true;
        }
        let b0 = grp[0];
        let len = m.vertex_dim(alg.left(b0)) * m.vertex_dim(alg.right(b0));
        let mut rows = FpMatrix::zeros(grp.len(), len, m.prime());
        for (r, &b) in grp.iter().enumerate() {
            rows.row_mut(r).copy_from_slice(m.block(b).data());
        }
        rows.rank() == grp.len()
    })
}

/// `X ∈ Gen(T)`: the minimal right approximation is onto.
pub fn in_gen(add: &AddCategory, x: &FDModule) -> Result<bool> {
    Ok(minimal_right_approx(x, add)?.map.is_surjective())
}

/// `X ∈ Cogen(T)`: the minimal left approximation is one-to-one.
pub fn in_cogen(add: &AddCategory, x: &FDModule) -> Result<bool> {
    Ok(minimal_left_approx(x, add)?.map.is_injective())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::replicated_algebra;
    use crate::linalg::DEFAULT_PRIME;
    use crate::module::{cokernel, projective, regular_module, simple};
    use crate::quiver::Quiver;

    #[test]
    fn left_approximation_of_p2_by_p1_p3() {
        let a = replicated_algebra(&Quiver::linear_a(3), 0, DEFAULT_PRIME).unwrap();
        let add = AddCategory::new(vec![projective(&a, 0), projective(&a, 2)]).unwrap();
        let p2 = projective(&a, 1);
        let f = minimal_left_approx(&p2, &add).unwrap();
        assert_eq!(f.multiplicities, [1, 0]);
        assert!(f.map.is_injective());
        let c = cokernel(&f.map).unwrap().0;
        assert!(is_isomorphic(&c, &simple(&a, 0)).unwrap());
        assert!(is_left_approximation(&f.map, &add).unwrap());
    }

    #[test]
    fn approximation_edge_cases() {
        let a = replicated_algebra(&Quiver::linear_a(3), 0, DEFAULT_PRIME).unwrap();
        let p1 = projective(&a, 0);
        let add = AddCategory::new(vec![p1.clone()]).unwrap();
        let g = minimal_right_approx(&p1, &add).unwrap();
        assert!(g.map.is_isomorphism());
        let s2 = simple(&a, 1);
        let f = minimal_left_approx(&s2, &add).unwrap();
        assert_eq!(f.map.target().dim(), 0);
        assert!(in_gen(&add, &simple(&a, 0)).unwrap());
        assert!(!in_gen(&add, &s2).unwrap());
    }

    #[test]
    fn faithfulness() {
        let a = replicated_algebra(&Quiver::linear_a(3), 1, DEFAULT_PRIME).unwrap();
        assert!(is_faithful(&regular_module(&a)));
        assert!(!is_faithful(&simple(&a, 0)));
    }
}
