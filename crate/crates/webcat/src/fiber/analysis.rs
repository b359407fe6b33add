//! Braiding analysis (crossing matrix, flip test) and the faithfulness
//! check on diagram bases.

use super::{bent_maps_impl, FiberSpec};
use crate::diagram::{
    enumerate_matchings, enumerate_planar_partitions, gl2_basis, matching_to_diagram,
    partition_to_diagram, Category, GeneratorName, ObjectWord, StrandLabel,
};
use crate::error::FiberError;
use crate::linalg::{rank_of_rows, LinearMap};
use crate::scalar::Scalar;

/// The sideways trilinear maps `(T_l, T_up)` of a GL2 or SO3 spec.
///
/// With an s-scaled SO3 tensor these are s-scaled too; products of two of
/// them (the H and I shapes) normalize exactly.
pub fn bent_maps<S: Scalar>(
    spec: &FiberSpec<S>,
) -> Result<(LinearMap<S>, LinearMap<S>), FiberError> {
    bent_maps_impl(spec)
}

/// The `n^2 x n^2` image of the positive crossing (SL2 or SO3).
pub fn crossing_matrix<S: Scalar>(spec: &FiberSpec<S>) -> Result<LinearMap<S>, FiberError> {
    if spec.category == Category::Gl2 {
        return Err(FiberError::WrongCategory(
            "crossing_matrix".into(),
            spec.category,
        ));
    }
    spec.generator_image(GeneratorName::CrossPos)
}

/// The permutation matrix of the flip `v_i (x) v_j -> v_j (x) v_i`.
pub fn flip_matrix<S: Scalar>(n: usize) -> LinearMap<S> {
    let mut m = LinearMap::zero(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            m.set(j * n + i, i * n + j, S::one());
        }
    }
    m
}

/// True iff the positive crossing acts as the flip map.
pub fn flip_test<S: Scalar>(spec: &FiberSpec<S>) -> Result<bool, FiberError> {
    let c = crossing_matrix(spec)?;
    Ok(c.approx_eq(&flip_matrix(spec.n), spec.eps))
}

/// Evaluate every basis diagram of `Hom(k, l)` and test linear
/// independence of the flattened images.
pub fn faithfulness_check<S: Scalar>(
    spec: &FiberSpec<S>,
    k: usize,
    l: usize,
) -> Result<bool, FiberError> {
    let diagrams = basis_diagrams(spec.category, k, l)?;
    if diagrams.is_empty() {
        return Ok(true);
    }
    let mut rows = Vec::with_capacity(diagrams.len());
    for d in &diagrams {
        rows.push(spec.evaluate(d)?.flatten());
    }
    Ok(rank_of_rows(&rows, spec.eps) == diagrams.len())
}

/// The diagram basis of `Hom(k, l)` for each category; GL2 uses the
/// alternating word `X Y X Y ...` of each length.
pub fn basis_diagrams(
    category: Category,
    k: usize,
    l: usize,
) -> Result<Vec<crate::diagram::LayeredDiagram>, FiberError> {
    let out = match category {
        Category::Sl2 => enumerate_matchings(k, l)
            .iter()
            .map(|m| matching_to_diagram(category, m))
            .collect(),
        Category::So3 => enumerate_planar_partitions(k, l)
            .iter()
            .map(partition_to_diagram)
            .collect(),
        Category::Gl2 => {
            let alt = |len: usize| {
                ObjectWord::new(
                    Category::Gl2,
                    (0..len)
                        .map(|i| {
                            if i % 2 == 0 {
                                StrandLabel::X
                            } else {
                                StrandLabel::Y
                            }
                        })
                        .collect(),
                )
                .expect("legal")
            };
            gl2_basis(&alt(k), &alt(l))?
        }
    };
    Ok(out)
}
