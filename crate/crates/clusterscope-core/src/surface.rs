//! Marked oriented surfaces as descriptors: per component a genus, a list
//! of boundary circles (each with its count of marked points), and a
//! puncture count. Supports the validity exclusions, the tagged-arc rank
//! formula, and the local-acyclicity classifier, which decides everything
//! except positive-genus surfaces with exactly one boundary marked point
//! and at least one puncture.

use alloc::vec::Vec;
use core::fmt;

/// One connected component of a marked surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceComponent {
    pub genus: u32,
    /// Marked-point count per boundary circle.
    pub boundary: Vec<u32>,
    pub punctures: u32,
}

impl SurfaceComponent {
    pub fn marked_points(&self) -> u32 {
        self.boundary.iter().sum::<u32>() + self.punctures
    }

    pub fn boundary_points(&self) -> u32 {
        self.boundary.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceDescriptor {
    pub components: Vec<SurfaceComponent>,
}

impl SurfaceDescriptor {
    /// Single-component shorthand.
    pub fn connected(genus: u32, boundary: &[u32], punctures: u32) -> Self {
        SurfaceDescriptor {
            components: alloc::vec![SurfaceComponent {
                genus,
                boundary: boundary.to_vec(),
                punctures,
            }],
        }
    }
}

/// A reason a descriptor is not a usable marked surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceViolation {
    /// No components at all.
    EmptySurface,
    /// A component without any marked points.
    NoMarkedPoints { component: usize },
    /// A boundary circle with zero marked points.
    UnmarkedBoundaryCircle { component: usize, circle: usize },
    /// A sphere with at most three punctures.
    SphereWithFewPunctures { component: usize },
    /// A disc with one boundary marked point and at most one puncture.
    OnePointDiscFewPunctures { component: usize },
    /// An unpunctured disc with at most two boundary marked points (three
    /// is the smallest allowed).
    SmallUnpuncturedDisc { component: usize },
}

impl fmt::Display for SurfaceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceViolation::EmptySurface => write!(f, "surface has no components"),
            SurfaceViolation::NoMarkedPoints { component } => {
                write!(f, "component {} has no marked points", component + 1)
            }
            SurfaceViolation::UnmarkedBoundaryCircle { component, circle } => write!(
                f,
                "component {} boundary circle {} has no marked points",
                component + 1,
                circle + 1
            ),
            SurfaceViolation::SphereWithFewPunctures { component } => write!(
                f,
                "component {} is a sphere with at most three punctures",
                component + 1
            ),
            SurfaceViolation::OnePointDiscFewPunctures { component } => write!(
                f,
                "component {} is a disc with one boundary point and at most one puncture",
                component + 1
            ),
            SurfaceViolation::SmallUnpuncturedDisc { component } => write!(
                f,
                "component {} is an unpunctured disc with fewer than three boundary points",
                component + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    Invalid(Vec<SurfaceViolation>),
}

impl fmt::Display for SurfaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceError::Invalid(violations) => {
                write!(f, "invalid surface descriptor:")?;
                for v in violations {
                    write!(f, " {v};")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for SurfaceError {}

/// Checks a descriptor against the marked-surface exclusions. An empty
/// list means the descriptor is valid.
pub fn validate_surface(d: &SurfaceDescriptor) -> Vec<SurfaceViolation> {
    let mut out = Vec::new();
    if d.components.is_empty() {
        out.push(SurfaceViolation::EmptySurface);
    }
    for (ci, c) in d.components.iter().enumerate() {
        for (bi, &count) in c.boundary.iter().enumerate() {
            if count == 0 {
                out.push(SurfaceViolation::UnmarkedBoundaryCircle { component: ci, circle: bi });
            }
        }
        if c.marked_points() == 0 {
            out.push(SurfaceViolation::NoMarkedPoints { component: ci });
        }
        let is_disc = c.genus == 0 && c.boundary.len() == 1;
        if c.genus == 0 && c.boundary.is_empty() && c.punctures <= 3 {
            out.push(SurfaceViolation::SphereWithFewPunctures { component: ci });
        }
        if is_disc && c.boundary[0] == 1 && c.punctures <= 1 {
            out.push(SurfaceViolation::OnePointDiscFewPunctures { component: ci });
        }
        if is_disc && c.boundary[0] <= 2 && c.punctures == 0 {
            out.push(SurfaceViolation::SmallUnpuncturedDisc { component: ci });
        }
    }
    out
}

fn require_valid(d: &SurfaceDescriptor) -> Result<(), SurfaceError> {
    let violations = validate_surface(d);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(SurfaceError::Invalid(violations))
    }
}

/// Number of arcs in any tagged triangulation: per component
/// 6g + 3h + 2p + |M| - 6, summed.
pub fn surface_rank(d: &SurfaceDescriptor) -> Result<usize, SurfaceError> {
    require_valid(d)?;
    let mut total: i64 = 0;
    for c in &d.components {
        total += 6 * i64::from(c.genus) + 3 * c.boundary.len() as i64
            + 2 * i64::from(c.punctures)
            + i64::from(c.marked_points())
            - 6;
    }
    // Validity leaves no component below rank 0 (the smallest allowed, the
    // triangle, has exactly 0).
    Ok(usize::try_from(total).expect("valid surfaces have nonnegative rank"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    LocallyAcyclic,
    NotLocallyAcyclic,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::LocallyAcyclic => write!(f, "locally acyclic"),
            Verdict::NotLocallyAcyclic => write!(f, "not locally acyclic"),
            Verdict::Unknown => write!(f, "unknown"),
        }
    }
}

/// Which classification theorem decided a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremTag {
    /// Closed component (no boundary): not locally acyclic.
    NoBoundary,
    /// Exactly one marked point in total: not locally acyclic.
    OneMarkedPoint,
    /// Genus zero with boundary includes into a disc: locally acyclic.
    IncludesInDisc,
    /// At least two boundary marked points: locally acyclic.
    AtLeastTwoBoundaryPoints,
    /// Positive genus, one boundary marked point, punctured: open.
    OpenCase,
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremTag::NoBoundary => "Thm-noboundary",
            TheoremTag::OneMarkedPoint => "Thm-oneboundary",
            TheoremTag::IncludesInDisc => "Thm-inadisc",
            TheoremTag::AtLeastTwoBoundaryPoints => "Thm-atleast2",
            TheoremTag::OpenCase => "Remark-unknown",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceClassification {
    pub verdict: Verdict,
    /// Per-component verdict and the theorem that fired.
    pub components: Vec<(Verdict, TheoremTag)>,
}

fn classify_component(c: &SurfaceComponent) -> (Verdict, TheoremTag) {
    if c.boundary.is_empty() {
        return (Verdict::NotLocallyAcyclic, TheoremTag::NoBoundary);
    }
    if c.marked_points() == 1 {
        return (Verdict::NotLocallyAcyclic, TheoremTag::OneMarkedPoint);
    }
    if c.genus == 0 {
        return (Verdict::LocallyAcyclic, TheoremTag::IncludesInDisc);
    }
    if c.boundary_points() >= 2 {
        return (Verdict::LocallyAcyclic, TheoremTag::AtLeastTwoBoundaryPoints);
    }
    (Verdict::Unknown, TheoremTag::OpenCase)
}

/// Classifies a valid descriptor component by component: locally acyclic
/// iff every component is, not locally acyclic iff some component is not,
/// otherwise unknown.
pub fn classify_surface(d: &SurfaceDescriptor) -> Result<SurfaceClassification, SurfaceError> {
    require_valid(d)?;
    let components: Vec<(Verdict, TheoremTag)> =
        d.components.iter().map(classify_component).collect();
    let verdict = if components.iter().any(|(v, _)| *v == Verdict::NotLocallyAcyclic) {
        Verdict::NotLocallyAcyclic
    } else if components.iter().any(|(v, _)| *v == Verdict::Unknown) {
        Verdict::Unknown
    } else {
        Verdict::LocallyAcyclic
    };
    Ok(SurfaceClassification { verdict, components })
}
