//! Independent brute-force oracle over finite abelian groups, plus a seeded
//! generator of valid diagrams.
//!
//! The oracle decomposes a finite presented group into explicit cyclic
//! factors and verifies claims elementwise, by exhaustive enumeration, so it
//! exercises none of the lattice-certificate logic it is checking.

mod gen;

pub use gen::{gen_four, gen_hom_pair, gen_snake, GenConfig};

use crate::abgroup::{Element, FpAbGroup, Hom};
use crate::linalg::{snf, IntMatrix, ModSolver, Solver};
use crate::snake::{connecting_hom, ExactSequence, ValidatedSnake};
use num_bigint::BigInt;
use num_integer::Integer;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("diagram generation exhausted its resample budget")]
    GenerationExhausted,
}

/// A finite presented group realized as an explicit product of cyclic
/// groups; elements are tuples of residues. The bridge matrices come from
/// the Smith decomposition of the relation basis.
#[derive(Clone, Debug)]
pub struct EnumGroup {
    group: FpAbGroup,
    cyclic_orders: Vec<u64>,
    /// Rows of `u` at the kept (order > 1) indices: coordinates → residues.
    to_res: IntMatrix,
    /// Columns of `u⁻¹` at the kept indices: residues → coordinates.
    from_res: IntMatrix,
}

impl EnumGroup {
    pub fn new(group: &FpAbGroup, cap: u64) -> Result<Self, OracleError> {
        let order = group
            .order()
            .ok_or_else(|| OracleError::CapExceeded("group is infinite".into()))?;
        if order > BigInt::from(cap) {
            return Err(OracleError::CapExceeded(format!(
                "group order {order} exceeds cap {cap}"
            )));
        }
        let n = group.n_gens();
        let s = snf(group.relations().basis());
        let diag = s.diagonal();
        debug_assert_eq!(diag.len(), n, "finite groups have full-rank relations");
        let kept: Vec<usize> = (0..n)
            .filter(|&i| diag[i] > BigInt::from(1u8))
            .collect();
        let cyclic_orders: Vec<u64> = kept
            .iter()
            .map(|&i| u64::try_from(&diag[i]).expect("orders are bounded by the cap"))
            .collect();
        let u_solver = Solver::new(&s.u);
        let mut u_inv_cols = Vec::with_capacity(n);
        for i in 0..n {
            let e: Vec<BigInt> = (0..n).map(|k| BigInt::from(u8::from(k == i))).collect();
            u_inv_cols.push(
                u_solver
                    .solve(&e)
                    .expect("internal: unimodular matrices are invertible"),
            );
        }
        let u_inv = IntMatrix::from_columns(n, &u_inv_cols);
        let to_res = IntMatrix::from_fn(kept.len(), n, |i, j| s.u.at(kept[i], j).clone());
        let from_res = IntMatrix::from_fn(n, kept.len(), |i, j| u_inv.at(i, kept[j]).clone());
        Ok(EnumGroup {
            group: group.clone(),
            cyclic_orders,
            to_res,
            from_res,
        })
    }

    pub fn group(&self) -> &FpAbGroup {
        &self.group
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.cyclic_orders.len()]
    }

    /// All residue tuples; the trivial group has exactly the empty tuple.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &d in &self.cyclic_orders {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for r in 0..d {
                    let mut v = e.clone();
                    v.push(r);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    pub fn to_residues(&self, coords: &[BigInt]) -> Vec<u64> {
        let y = self.to_res.mul_vec(coords);
        y.iter()
            .zip(&self.cyclic_orders)
            .map(|(v, &d)| {
                u64::try_from(&v.mod_floor(&BigInt::from(d))).expect("residue fits the order")
            })
            .collect()
    }

    pub fn lift(&self, res: &[u64]) -> Vec<BigInt> {
        let v: Vec<BigInt> = res.iter().map(|&r| BigInt::from(r)).collect();
        self.from_res.mul_vec(&v)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.cyclic_orders)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect()
    }
}

fn push_residues(h: &Hom, src: &EnumGroup, tgt: &EnumGroup, x: &[u64]) -> Vec<u64> {
    tgt.to_residues(&h.apply(&src.lift(x)))
}

/// Exhaustively computes image and kernel elementwise at every interior
/// position and compares the sets.
pub fn enum_check_exact(seq: &ExactSequence, cap: u64) -> Result<bool, OracleError> {
    let views = seq
        .terms()
        .iter()
        .map(|t| EnumGroup::new(t, cap))
        .collect::<Result<Vec<_>, _>>()?;
    for i in 1..seq.terms().len().saturating_sub(1) {
        let im: HashSet<Vec<u64>> = views[i - 1]
            .elements()
            .into_iter()
            .map(|x| push_residues(&seq.maps()[i - 1], &views[i - 1], &views[i], &x))
            .collect();
        let ker: HashSet<Vec<u64>> = views[i]
            .elements()
            .into_iter()
            .filter(|x| {
                push_residues(&seq.maps()[i], &views[i], &views[i + 1], x) == views[i + 1].zero()
            })
            .collect();
        if im != ker {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The connecting map tabulated by exhaustive chase: one entry per element
/// of `ker γ ∩ im g`, with the class of its image in the quotient.
#[derive(Clone, Debug)]
pub struct ConnectingTable {
    pub entries: Vec<(Element, Element)>,
    /// Every lift through g and every preimage through f' give the same
    /// class, for every domain element.
    pub independent: bool,
    /// The table coincides with the lattice-computed connecting map,
    /// transported through the presentation maps.
    pub matches_lattice_delta: bool,
}

/// Chases every element of `ker γ ∩ im g` through ALL lifts and ALL
/// f'-preimages, checks that the resulting class is independent of every
/// choice, and compares against `connecting_hom`.
pub fn enum_connecting(v: &ValidatedSnake, cap: u64) -> Result<ConnectingTable, OracleError> {
    let d = v.diagram();
    let va = EnumGroup::new(&d.a, cap)?;
    let vb = EnumGroup::new(&d.b, cap)?;
    let vc = EnumGroup::new(&d.c, cap)?;
    let va1 = EnumGroup::new(&d.a1, cap)?;
    let vb1 = EnumGroup::new(&d.b1, cap)?;
    let vc1 = EnumGroup::new(&d.c1, cap)?;

    let delta = connecting_hom(v);

    // all lifts through g, indexed by the image element
    let mut lifts: HashMap<Vec<u64>, Vec<Vec<u64>>> = HashMap::new();
    for b in vb.elements() {
        lifts
            .entry(push_residues(&d.g, &vb, &vc, &b))
            .or_default()
            .push(b);
    }

    // the dividing subgroup im α + ker f' of A', elementwise
    let im_alpha: HashSet<Vec<u64>> = va
        .elements()
        .into_iter()
        .map(|a| push_residues(&d.alpha, &va, &va1, &a))
        .collect();
    let ker_f1: HashSet<Vec<u64>> = va1
        .elements()
        .into_iter()
        .filter(|k| push_residues(&d.f1, &va1, &vb1, k) == vb1.zero())
        .collect();
    let mut dividing: HashSet<Vec<u64>> = HashSet::new();
    for x in &im_alpha {
        for y in &ker_f1 {
            dividing.insert(va1.add(x, y));
        }
    }

    // canonical class representative: lexicographic minimum of the coset
    let mut class_min: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
    for a1 in va1.elements() {
        let rep = dividing
            .iter()
            .map(|s| va1.add(&a1, s))
            .min()
            .expect("the dividing subgroup contains zero");
        class_min.insert(a1, rep);
    }

    // classes of all f'-preimages, indexed by the target element of B'
    let mut preimage_classes: HashMap<Vec<u64>, HashSet<Vec<u64>>> = HashMap::new();
    for a1 in va1.elements() {
        let b1 = push_residues(&d.f1, &va1, &vb1, &a1);
        preimage_classes
            .entry(b1)
            .or_default()
            .insert(class_min[&a1].clone());
    }

    let domain_solver = ModSolver::new(delta.domain.inclusion.matrix(), d.c.relations());
    let mut entries = Vec::new();
    let mut independent = true;
    let mut matches = true;
    for c in vc.elements() {
        if push_residues(&d.gamma, &vc, &vc1, &c) != vc1.zero() {
            continue;
        }
        let Some(lift_list) = lifts.get(&c) else {
            continue; // not in im g
        };
        let mut classes: HashSet<Vec<u64>> = HashSet::new();
        for b in lift_list {
            let b1 = push_residues(&d.beta, &vb, &vb1, b);
            let pc = preimage_classes
                .get(&b1)
                .expect("internal: every pushed lift has an f'-preimage by row exactness");
            classes.extend(pc.iter().cloned());
        }
        if classes.len() != 1 {
            independent = false;
        }
        let chase_class = classes
            .iter()
            .min()
            .expect("at least one lift exists")
            .clone();

        // lattice-side δ at the same element, through the presentations
        let c_coords = vc.lift(&c);
        let y = domain_solver
            .solve(&c_coords)
            .expect("internal: the element lies in the presented domain subgroup");
        let delta_coords = delta.hom.apply(&y);
        let delta_class = class_min[&va1.to_residues(&delta_coords)].clone();
        if delta_class != chase_class {
            matches = false;
        }

        entries.push((
            d.c.element(c_coords),
            delta.codomain.group.element(va1.lift(&chase_class)),
        ));
    }
    Ok(ConnectingTable {
        entries,
        independent,
        matches_lattice_delta: matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snake::{validate, SnakeDiagram};

    fn m1(x: i64) -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[x]])
    }

    #[test]
    fn enum_view_of_z6_as_z2_x_z3_style_decomposition() {
        let g = FpAbGroup::from_relation_columns(
            2,
            &[
                vec![BigInt::from(2), BigInt::from(0)],
                vec![BigInt::from(0), BigInt::from(3)],
            ],
        )
        .unwrap();
        let view = EnumGroup::new(&g, 512).unwrap();
        assert_eq!(view.order(), 6);
        assert_eq!(view.elements().len(), 6);
        // round-trip through lift
        for e in view.elements() {
            assert_eq!(view.to_residues(&view.lift(&e)), e);
        }
    }

    #[test]
    fn infinite_group_exceeds_cap() {
        assert!(matches!(
            EnumGroup::new(&FpAbGroup::free(1), 512),
            Err(OracleError::CapExceeded(_))
        ));
        assert!(matches!(
            EnumGroup::new(&FpAbGroup::cyclic(1000), 512),
            Err(OracleError::CapExceeded(_))
        ));
    }

    #[test]
    fn trivial_group_has_one_element() {
        let view = EnumGroup::new(&FpAbGroup::trivial(), 512).unwrap();
        assert_eq!(view.elements(), vec![Vec::<u64>::new()]);
        assert_eq!(view.order(), 1);
    }

    fn z4_chain(mid: i64) -> ExactSequence {
        let z4 = FpAbGroup::cyclic(4);
        let double = Hom::new(z4.clone(), z4.clone(), m1(2)).unwrap();
        let second = Hom::new(z4.clone(), z4.clone(), m1(mid)).unwrap();
        ExactSequence::new(vec![z4.clone(), z4.clone(), z4], vec![double, second])
    }

    #[test]
    fn exactness_by_enumeration_matches_hand_computation() {
        // Z/4 --x2--> Z/4 --x2--> Z/4 is exact in the middle (im = ker = {0,2})
        assert!(enum_check_exact(&z4_chain(2), 512).unwrap());
        // with x1 in the second slot the kernel shrinks to {0}
        assert!(!enum_check_exact(&z4_chain(1), 512).unwrap());
        // and both agree with the lattice certificate
        assert!(z4_chain(2).is_exact());
        assert!(!z4_chain(1).is_exact());
    }

    #[test]
    fn short_exact_z2_identity() {
        let t = FpAbGroup::trivial();
        let z2 = FpAbGroup::cyclic(2);
        let seq = ExactSequence::new(
            vec![t.clone(), z2.clone(), z2.clone(), t.clone()],
            vec![
                Hom::zero(t.clone(), z2.clone()),
                Hom::identity(&z2),
                Hom::zero(z2, t),
            ],
        );
        assert!(enum_check_exact(&seq, 512).unwrap());
    }

    #[test]
    fn connecting_table_on_z8_ladder() {
        // rows Z/8 --x2--> Z/8 --proj--> Z/2, verticals (x2, x2, x0):
        // the chase sends the generator of ker γ = Z/2 to the nonzero class
        let z8 = FpAbGroup::cyclic(8);
        let z2 = FpAbGroup::cyclic(2);
        let f = Hom::new(z8.clone(), z8.clone(), m1(2)).unwrap();
        let g = Hom::new(z8.clone(), z2.clone(), m1(1)).unwrap();
        let d = SnakeDiagram {
            a: z8.clone(),
            b: z8.clone(),
            c: z2.clone(),
            a1: z8.clone(),
            b1: z8.clone(),
            c1: z2.clone(),
            f: f.clone(),
            g: g.clone(),
            f1: f,
            g1: g,
            alpha: Hom::new(z8.clone(), z8.clone(), m1(2)).unwrap(),
            beta: Hom::new(z8.clone(), z8.clone(), m1(2)).unwrap(),
            gamma: Hom::new(z2.clone(), z2.clone(), m1(0)).unwrap(),
        };
        let v = validate(d).unwrap();
        let table = enum_connecting(&v, 512).unwrap();
        assert!(table.independent);
        assert!(table.matches_lattice_delta);
        assert_eq!(table.entries.len(), 2); // ker γ ∩ im g = Z/2 elementwise
        let nonzero: Vec<_> = table
            .entries
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .collect();
        assert_eq!(nonzero.len(), 1);
        assert!(!nonzero[0].1.is_zero());
    }

    #[test]
    fn trivial_diagram_has_empty_table() {
        let t = FpAbGroup::trivial;
        let zid = || Hom::zero(t(), t());
        let d = SnakeDiagram {
            a: t(),
            b: t(),
            c: t(),
            a1: t(),
            b1: t(),
            c1: t(),
            f: zid(),
            g: zid(),
            f1: zid(),
            g1: zid(),
            alpha: zid(),
            beta: zid(),
            gamma: zid(),
        };
        let v = validate(d).unwrap();
        let table = enum_connecting(&v, 512).unwrap();
        assert!(table.independent && table.matches_lattice_delta);
        // the trivial group's one element is chased to the trivial class
        assert_eq!(table.entries.len(), 1);
        assert!(table.entries[0].0.is_zero());
    }

    #[test]
    fn infinite_diagram_is_rejected() {
        let z = FpAbGroup::free(1);
        let z2 = FpAbGroup::cyclic(2);
        let f = Hom::new(z.clone(), z.clone(), m1(2)).unwrap();
        let g = Hom::new(z.clone(), z2.clone(), m1(1)).unwrap();
        let d = SnakeDiagram {
            a: z.clone(),
            b: z.clone(),
            c: z2.clone(),
            a1: z.clone(),
            b1: z.clone(),
            c1: z2.clone(),
            f: f.clone(),
            g: g.clone(),
            f1: f,
            g1: g,
            alpha: Hom::new(z.clone(), z.clone(), m1(2)).unwrap(),
            beta: Hom::new(z.clone(), z.clone(), m1(2)).unwrap(),
            gamma: Hom::new(z2.clone(), z2.clone(), m1(0)).unwrap(),
        };
        let v = validate(d).unwrap();
        assert!(matches!(
            enum_connecting(&v, 512),
            Err(OracleError::CapExceeded(_))
        ));
    }
}
