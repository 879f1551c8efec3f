//! Named example quivers: the ones worked through in the module docs and
//! tests, plus the gallery aliases `la1..la4` and `nonla1..nonla4`. The
//! surface-backed entries also expose their marked-surface descriptors so
//! the rank formula and the classifier can be checked against quiver-side
//! computations.

use crate::quiver::IceQuiver;
use crate::surface::SurfaceDescriptor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    UnknownName,
}

impl core::fmt::Display for CatalogError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CatalogError::UnknownName => write!(f, "unknown catalog name"),
        }
    }
}

impl core::error::Error for CatalogError {}

/// Canonical entries first, aliases after. `catalog_quiver` accepts all of
/// them.
pub fn catalog_names() -> &'static [&'static str] {
    &[
        "smallex", "markov", "torus1", "torus2", "sphere4", "x6", "x7", "triang_a", "triang_b",
        "triang_c", "banff1_top", "la1", "la2", "la3", "la4", "nonla1", "nonla2", "nonla3",
        "nonla4",
    ]
}

fn build(n: usize, arrows: &[(usize, usize, i64)]) -> IceQuiver {
    IceQuiver::from_arrows(n, arrows, &[]).expect("catalog arrows are well formed")
}

fn resolve_alias(name: &str) -> &str {
    match name {
        "banff1_top" | "la1" => "smallex",
        "la2" => "torus2",
        "la3" => "triang_b",
        "la4" => "x6",
        "nonla1" => "markov",
        "nonla2" => "torus1",
        "nonla3" => "sphere4",
        "nonla4" => "x7",
        other => other,
    }
}

/// Looks up a quiver by name. All catalog quivers are fully mutable.
pub fn catalog_quiver(name: &str) -> Result<IceQuiver, CatalogError> {
    let q = match resolve_alias(name) {
        // Oriented 3-cycle with a sink attached to all of it.
        "smallex" => build(4, &[(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 1), (1, 3, 1), (2, 3, 1)]),
        // Doubled oriented 3-cycle.
        "markov" => build(3, &[(0, 1, 2), (1, 2, 2), (2, 0, 2)]),
        // Triangulated torus with one boundary marked point.
        "torus1" => {
            build(4, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 0, 1), (3, 1, 1), (2, 3, 2)])
        }
        // Same torus with a second boundary marked point.
        "torus2" => build(
            5,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (0, 2, 1),
                (3, 0, 1),
                (3, 1, 1),
                (2, 3, 2),
                (4, 0, 1),
                (1, 4, 1),
            ],
        ),
        // Triangulated four-punctured sphere (an octahedron of arrows).
        "sphere4" => build(
            6,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 0, 1),
                (3, 0, 1),
                (0, 4, 1),
                (4, 2, 1),
                (2, 5, 1),
                (5, 1, 1),
                (1, 3, 1),
                (4, 3, 1),
                (5, 4, 1),
                (3, 5, 1),
            ],
        ),
        // Two doubled petals through a hub plus a pendant arrow.
        "x6" => build(
            6,
            &[(0, 1, 1), (1, 3, 2), (3, 0, 1), (0, 2, 1), (2, 4, 2), (4, 0, 1), (0, 5, 1)],
        ),
        // Three doubled petals through a hub.
        "x7" => build(
            7,
            &[
                (0, 1, 1),
                (1, 3, 2),
                (3, 0, 1),
                (0, 4, 1),
                (4, 2, 2),
                (2, 0, 1),
                (0, 6, 1),
                (6, 5, 2),
                (5, 0, 1),
            ],
        ),
        // Three triangulations of the same twice-marked, thrice-punctured
        // disc.
        "triang_a" => build(
            8,
            &[
                (0, 3, 1),
                (3, 6, 1),
                (7, 4, 1),
                (4, 1, 1),
                (0, 1, 1),
                (1, 2, 1),
                (2, 0, 1),
                (7, 6, 1),
                (6, 5, 1),
                (5, 7, 1),
                (2, 4, 1),
                (4, 5, 1),
                (5, 3, 1),
                (3, 2, 1),
            ],
        ),
        "triang_b" => build(
            8,
            &[
                (0, 2, 1),
                (2, 1, 1),
                (2, 3, 1),
                (3, 5, 1),
                (5, 4, 1),
                (4, 2, 1),
                (7, 5, 1),
                (5, 6, 1),
            ],
        ),
        "triang_c" => build(
            8,
            &[
                (0, 2, 1),
                (1, 2, 1),
                (3, 2, 1),
                (5, 3, 1),
                (5, 4, 1),
                (4, 2, 1),
                (5, 7, 1),
                (5, 6, 1),
                (2, 5, 1),
            ],
        ),
        _ => return Err(CatalogError::UnknownName),
    };
    Ok(q)
}

/// The marked surface a catalog quiver triangulates, where one is on
/// record. Names without a surface (and unknown names) return `None`.
pub fn catalog_surface(name: &str) -> Option<SurfaceDescriptor> {
    let d = match resolve_alias(name) {
        "markov" => SurfaceDescriptor::connected(1, &[], 1),
        "torus1" => SurfaceDescriptor::connected(1, &[1], 0),
        "torus2" => SurfaceDescriptor::connected(1, &[2], 0),
        "sphere4" => SurfaceDescriptor::connected(0, &[], 4),
        "triang_a" | "triang_b" | "triang_c" => SurfaceDescriptor::connected(0, &[2], 3),
        _ => return None,
    };
    Some(d)
}
