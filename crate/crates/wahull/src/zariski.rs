//! Z-linear and Z-affine sets: finite unions of vector or affine subspaces
//! kept in a canonical irredundant form, with containment, images under
//! linear maps, span unions and the invariance test for weighted automata.
//!
//! Canonical form: every component's point is reduced modulo its direction
//! (zero entries at the direction's pivot columns), no component is
//! contained in another, and components are sorted by a fixed total order.
//! Two canonical sets are structurally equal exactly when they are equal
//! as point sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{row_times_matrix, vec_ops, Matrix, Scalar, Subspace};
use crate::wa::WeightedAutomaton;

/// Which Zariski topology a set lives in: unions of vector subspaces
/// (every point is zero) or unions of affine subspaces.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Linear,
    Affine,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Linear => write!(f, "linear"),
            Mode::Affine => write!(f, "affine"),
        }
    }
}

/// One irreducible component `point + direction`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AffineComponent {
    point: Vec<Scalar>,
    direction: Subspace,
}

impl AffineComponent {
    /// Builds `point + direction`, reducing the point to its canonical
    /// coset representative.
    pub fn new(point: Vec<Scalar>, direction: Subspace) -> Result<Self> {
        if point.len() != direction.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: direction.ambient_dim(),
                found: point.len(),
            });
        }
        Ok(AffineComponent {
            point: direction.reduce(&point),
            direction,
        })
    }

    /// A component through the origin.
    pub fn linear(direction: Subspace) -> Self {
        AffineComponent {
            point: vec_ops::zeros(direction.ambient_dim()),
            direction,
        }
    }

    /// A single point.
    pub fn point_component(point: Vec<Scalar>) -> Self {
        let ambient = point.len();
        AffineComponent::new(point, Subspace::zero(ambient)).expect("dims agree")
    }

    pub fn point(&self) -> &[Scalar] {
        &self.point
    }

    pub fn direction(&self) -> &Subspace {
        &self.direction
    }

    pub fn ambient_dim(&self) -> usize {
        self.direction.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.direction.dim()
    }

    pub fn is_linear(&self) -> bool {
        vec_ops::is_zero(&self.point)
    }

    pub fn contains_point(&self, x: &[Scalar]) -> Result<bool> {
        self.check_ambient(x.len())?;
        Ok(self.direction.contains(&vec_ops::sub(x, &self.point)))
    }

    /// Set containment: `self` is inside `other` iff the directions are
    /// nested and the points differ by a direction vector of `other`.
    pub fn is_contained_in(&self, other: &AffineComponent) -> Result<bool> {
        self.check_ambient(other.ambient_dim())?;
        Ok(self.direction.is_contained_in(&other.direction)
            && other
                .direction
                .contains(&vec_ops::sub(&self.point, &other.point)))
    }

    /// Image under `x -> x M`, canonicalized.
    pub fn apply(&self, m: &Matrix) -> Result<AffineComponent> {
        self.check_ambient(m.rows())?;
        AffineComponent::new(row_times_matrix(&self.point, m), self.direction.apply(m))
    }

    /// Smallest affine component containing both.
    pub fn affine_union(&self, other: &AffineComponent) -> Result<AffineComponent> {
        self.check_ambient(other.ambient_dim())?;
        let mut dir = self.direction.join(&other.direction);
        dir.insert(&vec_ops::sub(&other.point, &self.point));
        AffineComponent::new(self.point.clone(), dir)
    }

    /// Smallest component through the origin containing both.
    pub fn linear_union(&self, other: &AffineComponent) -> Result<AffineComponent> {
        self.check_ambient(other.ambient_dim())?;
        let mut dir = self.direction.join(&other.direction);
        dir.insert(&self.point);
        dir.insert(&other.point);
        Ok(AffineComponent::linear(dir))
    }

    pub fn span_union(&self, other: &AffineComponent, mode: Mode) -> Result<AffineComponent> {
        match mode {
            Mode::Linear => self.linear_union(other),
            Mode::Affine => self.affine_union(other),
        }
    }

    fn check_ambient(&self, found: usize) -> Result<()> {
        if found != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found,
            });
        }
        Ok(())
    }
}

/// A finite irredundant union of components, canonically ordered.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZSet {
    ambient: usize,
    mode: Mode,
    components: Vec<AffineComponent>,
}

impl ZSet {
    /// Canonicalizes a raw component list: drops components contained in
    /// others and sorts by (dimension, point, basis). In linear mode every
    /// component must pass through the origin.
    pub fn from_components(
        ambient: usize,
        mode: Mode,
        raw: Vec<AffineComponent>,
    ) -> Result<ZSet> {
        for c in &raw {
            if c.ambient_dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: c.ambient_dim(),
                });
            }
            if mode == Mode::Linear && !c.is_linear() {
                return Err(Error::InvalidInput(
                    "linear-mode component does not pass through the origin".into(),
                ));
            }
        }
        let mut kept: Vec<AffineComponent> = Vec::new();
        for c in raw {
            if kept.iter().any(|k| c.is_contained_in(k).unwrap()) {
                continue;
            }
            kept.retain(|k| !k.is_contained_in(&c).unwrap());
            kept.push(c);
        }
        kept.sort_by(component_order);
        Ok(ZSet {
            ambient,
            mode,
            components: kept,
        })
    }

    pub fn empty(ambient: usize, mode: Mode) -> ZSet {
        ZSet {
            ambient,
            mode,
            components: Vec::new(),
        }
    }

    /// The whole ambient space.
    pub fn full(ambient: usize, mode: Mode) -> ZSet {
        ZSet {
            ambient,
            mode,
            components: vec![AffineComponent::linear(Subspace::full(ambient))],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn components(&self) -> &[AffineComponent] {
        &self.components
    }

    /// Number of irreducible components.
    pub fn length(&self) -> usize {
        self.components.len()
    }

    /// Maximum component dimension; -1 for the empty set.
    pub fn dim(&self) -> i64 {
        self.components
            .iter()
            .map(|c| c.dim() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn contains_point(&self, x: &[Scalar]) -> Result<bool> {
        if x.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: x.len(),
            });
        }
        for c in &self.components {
            if c.contains_point(x)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// A component (an irreducible set) lies in a finite union iff it lies
    /// in a single member, so this tests containment in each component.
    pub fn contains_component(&self, a: &AffineComponent) -> Result<bool> {
        if a.ambient_dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: a.ambient_dim(),
            });
        }
        for c in &self.components {
            if a.is_contained_in(c)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Inserts a component known not to be contained in any existing one,
    /// dropping components it absorbs and keeping the canonical order.
    pub(crate) fn insert_fresh_component(&mut self, comp: AffineComponent) {
        debug_assert!(!self.contains_component(&comp).unwrap());
        self.components
            .retain(|k| !k.is_contained_in(&comp).unwrap());
        let pos = self
            .components
            .binary_search_by(|p| component_order(p, &comp))
            .unwrap_or_else(|e| e);
        self.components.insert(pos, comp);
    }

    /// Removes the components at the two given positions.
    pub(crate) fn remove_pair(&mut self, i: usize, j: usize) {
        debug_assert!(i < j);
        self.components.remove(j);
        self.components.remove(i);
    }

    /// Whether the set contains the initial vector and is stable under
    /// every transition matrix of the automaton.
    pub fn is_invariant(&self, wa: &WeightedAutomaton) -> Result<bool> {
        if wa.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: wa.dim(),
            });
        }
        if !self.contains_point(wa.initial())? {
            return Ok(false);
        }
        for c in &self.components {
            for m in wa.transitions() {
                if !self.contains_component(&c.apply(m)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn component_order(a: &AffineComponent, b: &AffineComponent) -> std::cmp::Ordering {
    a.dim()
        .cmp(&b.dim())
        .then_with(|| a.point().cmp(b.point()))
        .then_with(|| a.direction().basis().cmp(b.direction().basis()))
}
