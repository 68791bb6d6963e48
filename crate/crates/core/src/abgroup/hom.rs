//! Homomorphisms between presented groups, as generator-action matrices.

use super::sub::{quotient, QuotObject, SubObject, Subgroup};
use super::{AbError, FpAbGroup};
use crate::linalg::{kernel_lattice, IntMatrix, Lattice, ModSolver};
use num_bigint::BigInt;

/// A homomorphism `source -> target` given by its action on generators
/// (`matrix` is `target.n_gens x source.n_gens`). Construction checks
/// well-definedness, so every `Hom` in circulation is a genuine
/// homomorphism of the presented groups.
#[derive(Clone, Debug)]
pub struct Hom {
    source: FpAbGroup,
    target: FpAbGroup,
    matrix: IntMatrix,
}

/// Two homs are equal when they have the same endpoints and agree on every
/// generator modulo the target relations.
impl PartialEq for Hom {
    fn eq(&self, other: &Self) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        self.matrix
            .sub(&other.matrix)
            .columns()
            .all(|c| self.target.relations().contains(&c))
    }
}

impl Hom {
    pub fn new(source: FpAbGroup, target: FpAbGroup, matrix: IntMatrix) -> Result<Self, AbError> {
        if matrix.rows() != target.n_gens() || matrix.cols() != source.n_gens() {
            return Err(AbError::ShapeMismatch {
                want_rows: target.n_gens(),
                want_cols: source.n_gens(),
                got_rows: matrix.rows(),
                got_cols: matrix.cols(),
            });
        }
        let mapped = matrix.mul(source.relations().basis());
        for (j, col) in mapped.columns().enumerate() {
            if !target.relations().contains(&col) {
                return Err(AbError::IllDefined { column: j });
            }
        }
        Ok(Hom {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: FpAbGroup, target: FpAbGroup) -> Self {
        let matrix = IntMatrix::zero(target.n_gens(), source.n_gens());
        Hom {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(g: &FpAbGroup) -> Self {
        Hom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.n_gens()),
        }
    }

    pub fn source(&self) -> &FpAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FpAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(coords)
    }

    /// `self ∘ first`. The endpoints must match structurally.
    pub fn compose(&self, first: &Hom) -> Hom {
        assert_eq!(
            first.target, self.source,
            "compose: inner target does not match outer source"
        );
        Hom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        }
    }

    pub fn is_zero_hom(&self) -> bool {
        self.matrix
            .columns()
            .all(|c| self.target.relations().contains(&c))
    }

    /// Full preimage of the target relations: `{x : matrix*x ∈ R_target}`,
    /// as a subgroup of the source.
    pub fn kernel_subgroup(&self) -> Subgroup {
        let aug = self.matrix.hstack(&self.target.relations().basis().neg());
        let ker = kernel_lattice(&aug);
        let src_part = ker.basis().row_range(0, self.source.n_gens());
        Subgroup::new(
            self.source.clone(),
            Lattice::from_generators(&src_part),
        )
    }

    /// Kernel with a presentation and its inclusion hom; the composite
    /// `self ∘ inclusion` is the zero hom.
    pub fn kernel(&self) -> SubObject {
        self.kernel_subgroup().presented()
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::new(
            self.target.clone(),
            Lattice::from_generators(&self.matrix),
        )
    }

    pub fn cokernel(&self) -> QuotObject {
        quotient(&self.target, &self.image())
    }

    /// `{x : matrix*x ∈ s}` as a subgroup of the source.
    pub fn preimage(&self, s: &Subgroup) -> Subgroup {
        assert_eq!(
            s.ambient(),
            &self.target,
            "preimage: subgroup ambient must be the hom target"
        );
        let aug = self.matrix.hstack(&s.lattice().basis().neg());
        let ker = kernel_lattice(&aug);
        let src_part = ker.basis().row_range(0, self.source.n_gens());
        Subgroup::new(
            self.source.clone(),
            Lattice::from_generators(&src_part),
        )
    }

    /// Image of a subgroup of the source, as a subgroup of the target.
    pub fn pushforward(&self, s: &Subgroup) -> Subgroup {
        assert_eq!(
            s.ambient(),
            &self.source,
            "pushforward: subgroup ambient must be the hom source"
        );
        Subgroup::new(
            self.target.clone(),
            Lattice::from_generators(&self.matrix.mul(s.lattice().basis())),
        )
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_subgroup().lattice() == self.source.relations()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().lattice().is_full()
    }

    /// Two-sided inverse of an isomorphism.
    pub fn inverse(&self) -> Result<Hom, AbError> {
        let solver = ModSolver::new(&self.matrix, self.target.relations());
        let mut cols = Vec::with_capacity(self.target.n_gens());
        for i in 0..self.target.n_gens() {
            let e: Vec<BigInt> = (0..self.target.n_gens())
                .map(|k| BigInt::from(u8::from(k == i)))
                .collect();
            cols.push(solver.solve(&e).ok_or(AbError::NotInvertible)?);
        }
        let inv = Hom::new(
            self.target.clone(),
            self.source.clone(),
            IntMatrix::from_columns(self.source.n_gens(), &cols),
        )
        .map_err(|_| AbError::NotInvertible)?;
        let ok = inv.compose(self) == Hom::identity(&self.source)
            && self.compose(&inv) == Hom::identity(&self.target);
        if ok {
            Ok(inv)
        } else {
            Err(AbError::NotInvertible)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m1(x: i64) -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[x]])
    }

    #[test]
    fn projection_is_well_defined() {
        let h = Hom::new(FpAbGroup::free(1), FpAbGroup::cyclic(2), m1(1)).unwrap();
        assert!(h.is_surjective());
        assert!(!h.is_injective());
    }

    #[test]
    fn torsion_cannot_map_to_free() {
        let err = Hom::new(FpAbGroup::cyclic(2), FpAbGroup::free(1), m1(1)).unwrap_err();
        assert!(matches!(err, AbError::IllDefined { column: 0 }));
    }

    #[test]
    fn doubling_on_z4_is_well_defined() {
        let z4 = FpAbGroup::cyclic(4);
        let h = Hom::new(z4.clone(), z4, m1(2)).unwrap();
        assert!(!h.is_injective());
        assert!(!h.is_surjective());
    }

    #[test]
    fn kernel_of_doubling_on_z4() {
        let z4 = FpAbGroup::cyclic(4);
        let h = Hom::new(z4.clone(), z4, m1(2)).unwrap();
        let k = h.kernel();
        assert!(k.group.is_isomorphic(&FpAbGroup::cyclic(2)));
        // generated by the coordinate 2 inside Z/4
        assert_eq!(k.inclusion.matrix(), &m1(2));
        assert!(h.compose(&k.inclusion).is_zero_hom());
    }

    #[test]
    fn kernel_triangle_for_injective_and_zero_maps() {
        let z = FpAbGroup::free(1);
        let double = Hom::new(z.clone(), z.clone(), m1(2)).unwrap();
        assert!(double.is_injective());
        assert!(double.kernel().group.is_trivial());
        let zero = Hom::zero(z.clone(), z.clone());
        assert_eq!(zero.kernel().subgroup.lattice(), &Lattice::full(1));
    }

    #[test]
    fn cokernel_of_doubling_is_z2() {
        let z = FpAbGroup::free(1);
        let double = Hom::new(z.clone(), z.clone(), m1(2)).unwrap();
        let c = double.cokernel();
        assert!(c.group.is_isomorphic(&FpAbGroup::cyclic(2)));
        assert!(c.projection.compose(&double).is_zero_hom());
        assert!(c.projection.is_surjective());
    }

    #[test]
    fn cokernel_of_identity_and_zero() {
        let g = FpAbGroup::cyclic(6);
        assert!(Hom::identity(&g).cokernel().group.is_trivial());
        let z = FpAbGroup::free(1);
        let zero = Hom::zero(z, g.clone());
        assert!(zero.cokernel().group.is_isomorphic(&g));
    }

    #[test]
    fn preimage_of_multiples() {
        let z = FpAbGroup::free(1);
        let double = Hom::new(z.clone(), z.clone(), m1(2)).unwrap();
        let six_z = Subgroup::new(z.clone(), Lattice::from_columns(1, &[vec![BigInt::from(6)]]));
        let pre = double.preimage(&six_z);
        assert_eq!(
            pre.lattice(),
            &Lattice::from_columns(1, &[vec![BigInt::from(3)]])
        );
        // preimage of the zero subgroup is the kernel
        let zero_sub = Subgroup::new(z.clone(), Lattice::zero(1));
        assert_eq!(double.preimage(&zero_sub), double.kernel_subgroup());
        // preimage of everything is everything
        let z2 = FpAbGroup::cyclic(2);
        let proj = Hom::new(z.clone(), z2.clone(), m1(1)).unwrap();
        assert_eq!(
            proj.preimage(&Subgroup::whole(&z2)).lattice(),
            &Lattice::full(1)
        );
    }

    #[test]
    fn composition_and_equality_mod_relations() {
        let z = FpAbGroup::free(1);
        let z2 = FpAbGroup::cyclic(2);
        let proj = Hom::new(z.clone(), z2.clone(), m1(1)).unwrap();
        let double = Hom::new(z.clone(), z.clone(), m1(2)).unwrap();
        assert!(proj.compose(&double).is_zero_hom());
        // x3 == x1 on Z/2
        let t3 = Hom::new(z2.clone(), z2.clone(), m1(3)).unwrap();
        assert_eq!(t3, Hom::identity(&z2));
    }

    #[test]
    fn inverse_of_unit_multiplication() {
        let z4 = FpAbGroup::cyclic(4);
        let t3 = Hom::new(z4.clone(), z4.clone(), m1(3)).unwrap();
        let inv = t3.inverse().unwrap();
        assert_eq!(inv.compose(&t3), Hom::identity(&z4));
        let t2 = Hom::new(z4.clone(), z4, m1(2)).unwrap();
        assert!(t2.inverse().is_err());
    }

    #[test]
    fn maps_with_trivial_endpoints() {
        let t = FpAbGroup::trivial();
        let g = FpAbGroup::cyclic(3);
        let to = Hom::zero(g.clone(), t.clone());
        let from = Hom::zero(t.clone(), g);
        assert!(to.is_surjective());
        assert!(from.is_injective());
        assert_eq!(to.matrix().rows(), 0);
        assert_eq!(from.matrix().cols(), 0);
        assert!(Hom::identity(&t).is_injective());
    }

    #[test]
    fn hom_equality_requires_equal_presentations() {
        let a = FpAbGroup::cyclic(2);
        let b = FpAbGroup::from_relation_columns(1, &[vec![BigInt::from(2)], vec![BigInt::from(4)]])
            .unwrap();
        assert_eq!(a, b); // same canonical lattice
        assert!(Hom::identity(&a) == Hom::identity(&b));
        let _ = BigInt::one();
    }
}
