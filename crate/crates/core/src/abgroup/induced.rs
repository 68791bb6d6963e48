//! Maps induced on chosen sub/quotient presentations.

use super::hom::Hom;
use super::sub::{QuotObject, SubObject};
use super::{AbError, FpAbGroup};
use crate::linalg::{IntMatrix, ModSolver};
use num_bigint::BigInt;

/// How one side of an induced square is presented: the whole group
/// (identity presentation), an embedded subgroup, or a quotient.
#[derive(Clone, Copy)]
pub enum Side<'a> {
    Whole(&'a FpAbGroup),
    Sub(&'a SubObject),
    Quot(&'a QuotObject),
}

impl<'a> Side<'a> {
    fn group(&self) -> &'a FpAbGroup {
        match self {
            Side::Whole(g) => g,
            Side::Sub(s) => &s.group,
            Side::Quot(q) => &q.group,
        }
    }

    fn ambient(&self) -> &'a FpAbGroup {
        match self {
            Side::Whole(g) => g,
            Side::Sub(s) => s.inclusion.target(),
            Side::Quot(q) => q.projection.source(),
        }
    }

    /// Ambient representatives of the presentation generators.
    fn generator_reps(&self) -> Vec<Vec<BigInt>> {
        match self {
            Side::Whole(g) => IntMatrix::identity(g.n_gens()).columns().collect(),
            Side::Sub(s) => s.inclusion.matrix().columns().collect(),
            Side::Quot(q) => {
                let solver = ModSolver::new(q.projection.matrix(), q.group.relations());
                IntMatrix::identity(q.group.n_gens())
                    .columns()
                    .map(|e| {
                        solver
                            .solve(&e)
                            .expect("internal: quotient projections are surjective")
                    })
                    .collect()
            }
        }
    }

    /// Expresses an ambient vector in presentation coordinates, if possible.
    fn express(&self, w: &[BigInt]) -> Option<Vec<BigInt>> {
        match self {
            Side::Whole(_) => Some(w.to_vec()),
            Side::Sub(s) => {
                let solver = ModSolver::new(
                    s.inclusion.matrix(),
                    s.inclusion.target().relations(),
                );
                solver.solve(w)
            }
            Side::Quot(q) => Some(q.projection.apply(w)),
        }
    }

    fn embed_hom(&self) -> Option<Hom> {
        match self {
            Side::Whole(g) => Some(Hom::identity(g)),
            Side::Sub(s) => Some(s.inclusion.clone()),
            Side::Quot(_) => None,
        }
    }

    fn project_hom(&self) -> Option<Hom> {
        match self {
            Side::Quot(q) => Some(q.projection.clone()),
            _ => None,
        }
    }
}

/// The unique hom making the evident square commute, when `h` respects the
/// chosen sub/quotient structures; `NotInduced` otherwise.
pub fn induced_hom(h: &Hom, src: Side, tgt: Side) -> Result<Hom, AbError> {
    assert_eq!(
        h.source(),
        src.ambient(),
        "induced_hom: source presentation lives in a different ambient group"
    );
    assert_eq!(
        h.target(),
        tgt.ambient(),
        "induced_hom: target presentation lives in a different ambient group"
    );

    let mut cols = Vec::with_capacity(src.group().n_gens());
    for rep in src.generator_reps() {
        let w = h.apply(&rep);
        let col = tgt.express(&w).ok_or_else(|| AbError::NotInduced {
            reason: "a generator image does not lie in the target presentation".into(),
        })?;
        cols.push(col);
    }
    let k = Hom::new(
        src.group().clone(),
        tgt.group().clone(),
        IntMatrix::from_columns(tgt.group().n_gens(), &cols),
    )
    .map_err(|e| AbError::NotInduced {
        reason: format!("the induced matrix is not well defined ({e})"),
    })?;

    // Verify the square; generator choices drop out exactly when it commutes.
    let commutes = match (src.embed_hom(), tgt.embed_hom()) {
        (Some(es), Some(et)) => et.compose(&k) == h.compose(&es),
        (Some(es), None) => {
            let pt = tgt.project_hom().expect("non-embed side is a quotient");
            k == pt.compose(h).compose(&es)
        }
        (None, Some(et)) => {
            let ps = src.project_hom().expect("non-embed side is a quotient");
            et.compose(&k).compose(&ps) == *h
        }
        (None, None) => {
            let ps = src.project_hom().expect("non-embed side is a quotient");
            let pt = tgt.project_hom().expect("non-embed side is a quotient");
            k.compose(&ps) == pt.compose(h)
        }
    };
    if !commutes {
        return Err(AbError::NotInduced {
            reason: "the induced square does not commute".into(),
        });
    }
    Ok(k)
}
