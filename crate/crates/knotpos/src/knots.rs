//! Bundled example knots.
//!
//! Three almost-positive knot diagrams (exactly one negative crossing each)
//! whose knots are *not* positive: the degree obstructions of the
//! [`crate::obstruct`] module refute positivity, and together with the
//! exhibited almost-positive diagram this classifies each knot as
//! almost-positive.  One knot per applicable obstruction case, indexed by
//! the second Jones coefficient:
//!
//! | id      | crossings | second Jones coeff | knot         |
//! |---------|-----------|--------------------|--------------|
//! | `k16v0` | 16        | 0                  | 16n125409    |
//! | `k15v1` | 15        | -1                 | 15n11331     |
//! | `k15v2` | 15        | -2                 | 15n11445     |
//!
//! Each is stored as a DT code and realized on demand; the default mirror
//! policy yields the almost-positive chirality.

use crate::diagram::dt::{realize_dt, MirrorPolicy};
use crate::diagram::{Diagram, DiagramError};

/// The 16-crossing almost-positive knot with second Jones coefficient 0.
pub const DT_K16V0: [i64; 16] =
    [4, 8, 22, 2, 26, 24, -30, -12, -28, -16, 6, 32, 10, -20, -18, -14];

/// The 15-crossing almost-positive knot with second Jones coefficient -1.
pub const DT_K15V1: [i64; 15] =
    [4, 10, 30, 20, 2, 24, 22, -26, -14, 8, 28, 12, -18, -16, 6];

/// The 15-crossing almost-positive knot with second Jones coefficient -2.
pub const DT_K15V2: [i64; 15] =
    [4, 8, 22, 2, 20, 26, 24, -28, -14, 10, 6, 30, 12, -18, -16];

/// The bundled almost-positive example knots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKnot {
    /// 16 crossings, second Jones coefficient 0 (16n125409).
    K16V0,
    /// 15 crossings, second Jones coefficient -1 (15n11331).
    K15V1,
    /// 15 crossings, second Jones coefficient -2 (15n11445).
    K15V2,
}

impl CatalogKnot {
    /// All catalog entries in display order.
    pub const ALL: [CatalogKnot; 3] = [CatalogKnot::K16V0, CatalogKnot::K15V1, CatalogKnot::K15V2];

    /// Stable identifier used by the CLI and fixture files.
    pub fn id(self) -> &'static str {
        match self {
            CatalogKnot::K16V0 => "k16v0",
            CatalogKnot::K15V1 => "k15v1",
            CatalogKnot::K15V2 => "k15v2",
        }
    }

    /// Look up a catalog entry by its identifier.
    pub fn from_id(id: &str) -> Option<CatalogKnot> {
        CatalogKnot::ALL.into_iter().find(|k| k.id() == id)
    }

    /// Human-readable description.
    pub fn description(self) -> &'static str {
        match self {
            CatalogKnot::K16V0 => {
                "16-crossing almost-positive diagram of 16n125409 (second Jones coefficient 0)"
            }
            CatalogKnot::K15V1 => {
                "15-crossing almost-positive diagram of 15n11331 (second Jones coefficient -1)"
            }
            CatalogKnot::K15V2 => {
                "15-crossing almost-positive diagram of 15n11445 (second Jones coefficient -2)"
            }
        }
    }

    /// The DT code of the bundled diagram.
    pub fn dt_entries(self) -> &'static [i64] {
        match self {
            CatalogKnot::K16V0 => &DT_K16V0,
            CatalogKnot::K15V1 => &DT_K15V1,
            CatalogKnot::K15V2 => &DT_K15V2,
        }
    }

    /// Realize the bundled diagram (almost-positive chirality).
    pub fn diagram(self) -> Result<Diagram, DiagramError> {
        realize_dt(self.dt_entries(), MirrorPolicy::FewestNegative, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::dt::to_dt;
    use crate::poly::{LaurentPoly1, LaurentPoly2, Var};
    use crate::skein::{conway, homfly};
    use crate::statesum::jones;
    use num_bigint::BigInt;

    fn poly_t(terms: &[(i64, i64)]) -> LaurentPoly1 {
        let mut p = LaurentPoly1::zero(Var::T);
        for &(e, c) in terms {
            p.add_term_units(4 * e, &BigInt::from(c));
        }
        p
    }

    fn poly_z(terms: &[(i64, i64)]) -> LaurentPoly1 {
        let mut p = LaurentPoly1::zero(Var::Z);
        for &(e, c) in terms {
            p.add_term_units(4 * e, &BigInt::from(c));
        }
        p
    }

    fn poly_az(terms: &[(i64, i64, i64)]) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for &(a, z, c) in terms {
            p.add_term(a, z, &BigInt::from(c));
        }
        p
    }

    #[test]
    fn catalog_diagrams_are_almost_positive_knots() {
        for k in CatalogKnot::ALL {
            let d = k.diagram().unwrap();
            let st = d.stats();
            assert_eq!(st.components, 1, "{}", k.id());
            assert_eq!(st.negative_crossings, 1, "{}", k.id());
            assert_eq!(st.crossings, k.dt_entries().len(), "{}", k.id());
            assert!(st.connected);
            assert_eq!(CatalogKnot::from_id(k.id()), Some(k));
        }
    }

    #[test]
    fn jones_of_k16v0() {
        let d = CatalogKnot::K16V0.diagram().unwrap();
        let expected = poly_t(&[
            (4, 1),
            (6, -3),
            (7, 12),
            (8, -24),
            (9, 38),
            (10, -49),
            (11, 56),
            (12, -56),
            (13, 48),
            (14, -37),
            (15, 23),
            (16, -12),
            (17, 5),
            (18, -1),
        ]);
        assert_eq!(jones(&d, None).unwrap(), expected);
    }

    #[test]
    fn jones_of_k15v1() {
        let d = CatalogKnot::K15V1.diagram().unwrap();
        let expected = poly_t(&[
            (3, 1),
            (4, -1),
            (5, 2),
            (6, -1),
            (7, -1),
            (8, 5),
            (9, -8),
            (10, 11),
            (11, -13),
            (12, 12),
            (13, -10),
            (14, 6),
            (15, -3),
            (16, 1),
        ]);
        assert_eq!(jones(&d, None).unwrap(), expected);
    }

    #[test]
    fn jones_of_k15v2() {
        let d = CatalogKnot::K15V2.diagram().unwrap();
        let expected = poly_t(&[
            (3, 1),
            (4, -2),
            (5, 5),
            (6, -6),
            (7, 7),
            (8, -6),
            (9, 3),
            (10, 1),
            (11, -4),
            (12, 6),
            (13, -7),
            (14, 5),
            (15, -3),
            (16, 1),
        ]);
        assert_eq!(jones(&d, None).unwrap(), expected);
    }

    #[test]
    fn homfly_of_k16v0() {
        let d = CatalogKnot::K16V0.diagram().unwrap();
        let expected = poly_az(&[
            (-8, 8, 1),
            (-8, 6, 8),
            (-8, 4, 17),
            (-8, 2, 13),
            (-8, 0, 3),
            (-10, 6, 3),
            (-10, 4, 5),
            (-10, 0, -2),
            (-12, 6, 4),
            (-12, 4, 10),
            (-12, 2, 11),
            (-12, 0, 6),
            (-14, 4, -8),
            (-14, 2, -18),
            (-14, 0, -11),
            (-16, 2, 5),
            (-16, 0, 6),
            (-18, 0, -1),
        ]);
        assert_eq!(homfly(&d, None).unwrap(), expected);
    }

    #[test]
    fn homfly_of_k15v1() {
        let d = CatalogKnot::K15V1.diagram().unwrap();
        let expected = poly_az(&[
            (-6, 6, 1),
            (-6, 4, 5),
            (-6, 2, 6),
            (-6, 0, 2),
            (-8, 6, 1),
            (-8, 4, 5),
            (-8, 2, 3),
            (-10, 4, 2),
            (-10, 2, 1),
            (-12, 4, 2),
            (-12, 2, 1),
            (-14, 2, -3),
            (-14, 0, -2),
            (-16, 0, 1),
        ]);
        assert_eq!(homfly(&d, None).unwrap(), expected);
    }

    #[test]
    fn homfly_of_k15v2() {
        let d = CatalogKnot::K15V2.diagram().unwrap();
        let expected = poly_az(&[
            (-6, 6, 1),
            (-6, 4, 4),
            (-6, 2, 4),
            (-6, 0, 1),
            (-8, 6, 2),
            (-8, 4, 9),
            (-8, 2, 10),
            (-8, 0, 3),
            (-10, 4, -1),
            (-10, 2, -6),
            (-10, 0, -4),
            (-12, 4, 2),
            (-12, 2, 4),
            (-12, 0, 3),
            (-14, 2, -3),
            (-14, 0, -3),
            (-16, 0, 1),
        ]);
        assert_eq!(homfly(&d, None).unwrap(), expected);
    }

    #[test]
    fn conway_of_catalog_knots() {
        let cases: [(CatalogKnot, &[(i64, i64)]); 3] = [
            (CatalogKnot::K16V0, &[(0, 1), (2, 11), (4, 24), (6, 15), (8, 1)]),
            (CatalogKnot::K15V1, &[(0, 1), (2, 8), (4, 14), (6, 2)]),
            (CatalogKnot::K15V2, &[(0, 1), (2, 9), (4, 14), (6, 3)]),
        ];
        for (k, terms) in cases {
            let d = k.diagram().unwrap();
            let nabla = conway(&d, None).unwrap();
            assert_eq!(nabla, poly_z(terms), "{}", k.id());
        }
    }

    /// For an almost-positive knot the Conway degree determines the minimal
    /// Jones degree: max deg nabla = 2 min deg V.
    #[test]
    fn conway_degree_matches_twice_min_jones_degree() {
        for k in CatalogKnot::ALL {
            let d = k.diagram().unwrap();
            let nabla = conway(&d, None).unwrap();
            let v = jones(&d, None).unwrap();
            let dn = nabla.degree_info().unwrap();
            let dv = v.degree_info().unwrap();
            assert_eq!(dn.max_deg, dv.min_deg * 2, "{}", k.id());
        }
    }

    #[test]
    fn dt_extraction_preserves_entry_multiset() {
        for k in CatalogKnot::ALL {
            let d = k.diagram().unwrap();
            let mut extracted: Vec<u64> =
                to_dt(&d).unwrap().iter().map(|e| e.unsigned_abs()).collect();
            let mut original: Vec<u64> =
                k.dt_entries().iter().map(|e| e.unsigned_abs()).collect();
            extracted.sort_unstable();
            original.sort_unstable();
            assert_eq!(extracted, original, "{}", k.id());
        }
    }
}
