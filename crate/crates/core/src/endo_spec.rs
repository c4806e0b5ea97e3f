//! JSON descriptions of endomorphisms.
//!
//! ```json
//! {"kind": "identity"}
//! {"kind": "inner", "element": 3}
//! {"kind": "images", "images": [1, 0]}
//! {"kind": "diag", "homs": [{"kind": "identity"}, {"kind": "map", "map": [0, 2, 1]}]}
//! {"kind": "wreath", "homs": [...], "sigma": [1, 0]}
//! ```
//!
//! `map`, `images`, `identity`, `trivial` and `inner` work on any group. The
//! remaining kinds need a direct product and refer to its factors.
//! Permutations are 0-based arrays of images.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_group::{FiniteGroup, ProductGroup};
use crate::hom_engine::{hom_from_generator_images, inner_automorphism, GroupHom};
use crate::perm::Permutation;
use crate::product_matrix::{
    diag, diag_reidemeister, from_matrix, perm_endo, permuted_diag_endo, permuted_diag_reidemeister,
    sum_formula_reidemeister, wreath_embed, EndoMatrix,
};
use crate::twisted::ExtNat;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EndoSpec {
    Identity,
    Trivial,
    /// Full table of images.
    Map { map: Vec<usize> },
    /// Images of the group's generators, in generator order.
    Images { images: Vec<usize> },
    /// Conjugation `x ↦ g x g^-1`.
    Inner { element: usize },
    /// One endomorphism per factor.
    Diag { homs: Vec<EndoSpec> },
    /// `(g_i) ↦ (g_{σ^-1(i)})`
    Perm { sigma: Permutation },
    /// `Diag(homs) P_{σ^-1}`, all entries automorphisms.
    Wreath { homs: Vec<EndoSpec>, sigma: Permutation },
    /// `Diag(homs) P_σ`, i.e. `(g_i) ↦ (φ_i(g_{σ(i)}))`.
    PermutedDiag { homs: Vec<EndoSpec>, sigma: Permutation },
    /// Entry `(i, j)` is the full image table of a map from factor `j` to factor `i`.
    Matrix { entries: Vec<Vec<Vec<usize>>> },
}

impl EndoSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    fn needs_product(&self) -> bool {
        matches!(
            self,
            EndoSpec::Diag { .. }
                | EndoSpec::Perm { .. }
                | EndoSpec::Wreath { .. }
                | EndoSpec::PermutedDiag { .. }
                | EndoSpec::Matrix { .. }
        )
    }

    /// Builds the endomorphism on a plain group.
    pub fn build(&self, g: &Arc<FiniteGroup>) -> Result<GroupHom> {
        match self {
            EndoSpec::Identity => Ok(GroupHom::identity(g)),
            EndoSpec::Trivial => Ok(GroupHom::trivial(g, g)),
            EndoSpec::Map { map } => GroupHom::new(g.clone(), g.clone(), map.clone()),
            EndoSpec::Images { images } => hom_from_generator_images(g, g, images),
            EndoSpec::Inner { element } => {
                if *element >= g.order() {
                    return Err(Error::InvalidSpec(format!("element {element} outside the group")));
                }
                Ok(inner_automorphism(g, *element))
            }
            _ => Err(Error::InvalidSpec("this kind needs a direct product".into())),
        }
    }

    /// Builds the endomorphism on a direct product.
    pub fn build_on_product(&self, p: &Arc<ProductGroup>) -> Result<GroupHom> {
        if !self.needs_product() {
            return self.build(p.group());
        }
        let factor_homs = |homs: &[EndoSpec]| -> Result<Vec<GroupHom>> {
            if homs.len() != p.factor_count() {
                return Err(Error::InvalidSpec(format!(
                    "{} maps for {} factors",
                    homs.len(),
                    p.factor_count()
                )));
            }
            homs.iter().enumerate().map(|(i, h)| h.build(p.factor(i))).collect()
        };
        match self {
            EndoSpec::Diag { homs } => from_matrix(&diag(p, &factor_homs(homs)?)?),
            EndoSpec::Perm { sigma } => Ok(perm_endo(p, sigma)?.endomorphism()),
            EndoSpec::Wreath { homs, sigma } => wreath_embed(p, &factor_homs(homs)?, sigma),
            EndoSpec::PermutedDiag { homs, sigma } => permuted_diag_endo(p, &factor_homs(homs)?, sigma),
            EndoSpec::Matrix { entries } => {
                let n = p.factor_count();
                if entries.len() != n || entries.iter().any(|r| r.len() != n) {
                    return Err(Error::InvalidSpec(format!("matrix must be {n}x{n}")));
                }
                let grid = entries
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(j, m)| GroupHom::new(p.factor(j).clone(), p.factor(i).clone(), m.clone()))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                from_matrix(&EndoMatrix::new(p, grid)?)
            }
            _ => unreachable!("plain kinds handled above"),
        }
    }

    /// The Reidemeister number from the product formulas, where one applies:
    /// diagonal, permuted diagonal, permutation and wreath kinds, and
    /// two-factor upper triangular matrices.
    pub fn formula_reidemeister(&self, p: &Arc<ProductGroup>) -> Result<Option<ExtNat>> {
        let factor_homs = |homs: &[EndoSpec]| -> Result<Vec<GroupHom>> {
            homs.iter().enumerate().map(|(i, h)| h.build(p.factor(i))).collect()
        };
        let identical = (1..p.factor_count()).all(|i| p.factor(i) == p.factor(0));
        Ok(match self {
            EndoSpec::Diag { homs } => Some(diag_reidemeister(&factor_homs(homs)?)),
            // Diag(φ) P_{σ^-1} is the permuted diagonal for σ^-1
            EndoSpec::Wreath { homs, sigma } if identical => {
                Some(permuted_diag_reidemeister(&factor_homs(homs)?, &sigma.inverse())?)
            }
            EndoSpec::PermutedDiag { homs, sigma } if identical => {
                Some(permuted_diag_reidemeister(&factor_homs(homs)?, sigma)?)
            }
            EndoSpec::Perm { sigma } if identical => {
                let ids: Vec<GroupHom> = (0..p.factor_count()).map(|i| GroupHom::identity(p.factor(i))).collect();
                Some(permuted_diag_reidemeister(&ids, &sigma.inverse())?)
            }
            EndoSpec::Matrix { .. } if p.factor_count() == 2 => {
                let f = self.build_on_product(p)?;
                let m = crate::product_matrix::to_matrix(p, &f);
                if m.is_upper_triangular() {
                    Some(sum_formula_reidemeister(m.entry(0, 0), m.entry(0, 1), m.entry(1, 1))?)
                } else {
                    None
                }
            }
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::{direct_product, Preset, DEFAULT_ORDER_CAP};

    fn g(p: &str) -> Arc<FiniteGroup> {
        Arc::new(p.parse::<Preset>().unwrap().build(DEFAULT_ORDER_CAP).unwrap())
    }

    #[test]
    fn plain_kinds() {
        let s3 = g("S3");
        assert!(EndoSpec::parse(r#"{"kind":"identity"}"#).unwrap().build(&s3).unwrap().is_identity());
        assert!(EndoSpec::parse(r#"{"kind":"trivial"}"#).unwrap().build(&s3).unwrap().is_trivial());
        let inner = EndoSpec::parse(r#"{"kind":"inner","element":1}"#).unwrap().build(&s3).unwrap();
        assert_eq!(inner, inner_automorphism(&s3, 1));
        let z3 = g("Z3");
        let neg = EndoSpec::parse(r#"{"kind":"map","map":[0,2,1]}"#).unwrap().build(&z3).unwrap();
        assert_eq!(neg.map(), &[0, 2, 1]);
        let same = EndoSpec::parse(r#"{"kind":"images","images":[2]}"#).unwrap().build(&z3).unwrap();
        assert_eq!(same, neg);
        assert!(EndoSpec::parse(r#"{"kind":"map","map":[0,1,1]}"#).unwrap().build(&z3).is_err());
        assert!(EndoSpec::parse(r#"{"kind":"nope"}"#).is_err());
        assert!(EndoSpec::parse(r#"{"kind":"perm","sigma":[1,0]}"#).unwrap().build(&z3).is_err());
    }

    #[test]
    fn product_kinds() {
        let z3 = g("Z3");
        let p = Arc::new(direct_product(&[z3.clone(), z3.clone()], DEFAULT_ORDER_CAP).unwrap());
        let swap = EndoSpec::parse(r#"{"kind":"perm","sigma":[1,0]}"#).unwrap();
        let wreath = EndoSpec::parse(
            r#"{"kind":"wreath","homs":[{"kind":"identity"},{"kind":"identity"}],"sigma":[1,0]}"#,
        )
        .unwrap();
        assert_eq!(swap.build_on_product(&p).unwrap(), wreath.build_on_product(&p).unwrap());

        let m = EndoSpec::parse(r#"{"kind":"matrix","entries":[[[0,1,2],[0,1,2]],[[0,0,0],[0,2,1]]]}"#).unwrap();
        let f = m.build_on_product(&p).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(p.coords(f.apply(p.encode(&[a, b]))), vec![(a + b) % 3, (3 - b) % 3]);
            }
        }
        let d = EndoSpec::parse(r#"{"kind":"diag","homs":[{"kind":"identity"}]}"#).unwrap();
        assert!(matches!(d.build_on_product(&p), Err(Error::InvalidSpec(_))));
        let pd = EndoSpec::parse(
            r#"{"kind":"permuted_diag","homs":[{"kind":"map","map":[0,2,1]},{"kind":"identity"}],"sigma":[1,0]}"#,
        )
        .unwrap();
        let f = pd.build_on_product(&p).unwrap();
        assert_eq!(p.coords(f.apply(p.encode(&[1, 2]))), vec![1, 1]);
    }

    #[test]
    fn formulas_agree_with_brute_force() {
        use crate::twisted::reidemeister_number;
        let s3 = g("S3");
        let p = Arc::new(direct_product(&[s3.clone(), s3.clone()], DEFAULT_ORDER_CAP).unwrap());
        let specs = [
            r#"{"kind":"diag","homs":[{"kind":"identity"},{"kind":"inner","element":1}]}"#,
            r#"{"kind":"perm","sigma":[1,0]}"#,
            r#"{"kind":"wreath","homs":[{"kind":"inner","element":3},{"kind":"inner","element":1}],"sigma":[1,0]}"#,
            r#"{"kind":"permuted_diag","homs":[{"kind":"inner","element":3},{"kind":"trivial"}],"sigma":[1,0]}"#,
        ];
        for text in specs {
            let spec = EndoSpec::parse(text).unwrap();
            let brute = reidemeister_number(&spec.build_on_product(&p).unwrap());
            assert_eq!(spec.formula_reidemeister(&p).unwrap(), Some(brute), "{text}");
        }
        let z3 = g("Z3");
        let p = Arc::new(direct_product(&[z3.clone(), z3.clone()], DEFAULT_ORDER_CAP).unwrap());
        let m = EndoSpec::parse(r#"{"kind":"matrix","entries":[[[0,1,2],[0,1,2]],[[0,0,0],[0,2,1]]]}"#).unwrap();
        assert_eq!(m.formula_reidemeister(&p).unwrap(), Some(ExtNat::Finite(3)));
        assert_eq!(EndoSpec::Identity.formula_reidemeister(&p).unwrap(), None);
    }
}
