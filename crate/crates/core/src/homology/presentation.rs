//! Finite group presentations and their abelianizations.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::abelian::{AbPresentation, AbelianHom, FgAbGroup};
use super::matrix::IntMatrix;
use crate::error::{structural, Error, Result};

/// A word in the generators: `(generator, exponent)` letters.
pub type GenWord = Vec<(usize, i64)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<GenWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<GenWord>) -> Result<Self> {
        let n = generators.len();
        if let Some(k) = relators.iter().position(|r| r.iter().any(|&(g, _)| g >= n)) {
            return Err(structural(format!("relator {k} uses an undeclared generator")));
        }
        crate::limits::check_matrix("relation matrix entries", relators.len(), n)?;
        Ok(Presentation { generators, relators })
    }

    pub fn trivial() -> Self {
        Presentation {
            generators: Vec::new(),
            relators: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Exponent-sum vector of a word.
    pub fn exponent_sums(&self, w: &[(usize, i64)]) -> Vec<BigInt> {
        let mut v = vec![BigInt::from(0); self.generators.len()];
        for &(g, e) in w {
            v[g] += e;
        }
        v
    }

    /// The abelianization as a presented abelian group: one generator per
    /// generator, one relation per relator.
    pub fn abelian_presentation(&self) -> AbPresentation {
        let rows: Vec<Vec<BigInt>> = self.relators.iter().map(|r| self.exponent_sums(r)).collect();
        AbPresentation::new(self.len(), IntMatrix::from_big_rows(rows, self.len()))
    }

    pub fn render_word(&self, w: &[(usize, i64)]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.generators[g].clone()
                } else {
                    format!("{}^{}", self.generators[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.render_word(r)).collect();
        write!(f, "{} >", rels.join(", "))
    }
}

pub fn abelianization(p: &Presentation) -> FgAbGroup {
    p.abelian_presentation().group()
}

/// A homomorphism given by the image word of each source generator.
#[derive(Clone, Debug)]
pub struct PresentationMap {
    pub source: Presentation,
    pub target: Presentation,
    pub images: Vec<GenWord>,
}

impl PresentationMap {
    pub fn new(source: Presentation, target: Presentation, images: Vec<GenWord>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(structural("one image word per source generator expected"));
        }
        if images.iter().flatten().any(|&(g, _)| g >= target.len()) {
            return Err(structural("image word uses an undeclared target generator"));
        }
        Ok(PresentationMap { source, target, images })
    }
}

/// The map induced on abelianizations. Relators are checked in the
/// abelianization only.
pub fn h1_induced_map(f: &PresentationMap) -> Result<AbelianHom> {
    let rows: Vec<Vec<BigInt>> = f.images.iter().map(|w| f.target.exponent_sums(w)).collect();
    let m = IntMatrix::from_big_rows(rows, f.target.len());
    AbelianHom::new(f.source.abelian_presentation(), f.target.abelian_presentation(), m).map_err(|e| match e {
        Error::Validation(msg) => Error::Validation(format!("incompatible presentation map: {msg}")),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::MapKind;

    fn p(gens: &[&str], rels: Vec<GenWord>) -> Presentation {
        Presentation::new(gens.iter().map(|s| s.to_string()).collect(), rels).unwrap()
    }

    #[test]
    fn small_abelianizations() {
        assert_eq!(abelianization(&p(&["a"], vec![vec![(0, 2)]])), FgAbGroup::cyclic(2));
        let comm = vec![(0, 1), (1, 1), (0, -1), (1, -1)];
        assert_eq!(abelianization(&p(&["a", "b"], vec![comm])), FgAbGroup::free(2));
        assert_eq!(abelianization(&Presentation::trivial()), FgAbGroup::trivial());
    }

    #[test]
    fn undeclared_generator_rejected() {
        assert!(Presentation::new(vec!["a".into()], vec![vec![(1, 1)]]).is_err());
    }

    #[test]
    fn induced_maps() {
        let z6 = p(&["a"], vec![vec![(0, 6)]]);
        let z3 = p(&["b"], vec![vec![(0, 3)]]);
        let id = PresentationMap::new(z6.clone(), z6.clone(), vec![vec![(0, 1)]]).unwrap();
        let h = h1_induced_map(&id).unwrap();
        assert_eq!(h.kind(), MapKind::Iso);
        assert_eq!(h.normalized_matrix(), IntMatrix::identity(1));
        let q = h1_induced_map(&PresentationMap::new(z6.clone(), z3.clone(), vec![vec![(0, 1)]]).unwrap()).unwrap();
        assert_eq!(q.kind(), MapKind::Epi);
        let triv = h1_induced_map(&PresentationMap::new(z6.clone(), Presentation::trivial(), vec![vec![]]).unwrap())
            .unwrap();
        assert!(triv.matrix.is_zero());
        // Z/3 -> Z/6 by a |-> a is not well defined.
        let bad = PresentationMap::new(z3, z6, vec![vec![(0, 1)]]).unwrap();
        assert!(matches!(h1_induced_map(&bad), Err(Error::Validation(_))));
    }
}
