//! Functors stored as explicit tables on a finite diagram.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::gamma::{GammaEMorphism, PointedSetTuple};
use super::library::GammaFunctor;
use crate::error::{structural, Error, Result};
use crate::homology::{AbPresentation, IntMatrix};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub morphism: GammaEMorphism,
    pub matrix: IntMatrix,
}

/// Values on a list of objects and matrices on every morphism between
/// them. Immutable after validation.
#[derive(Clone, Debug)]
pub struct TabulatedFunctor {
    objects: Vec<PointedSetTuple>,
    values: Vec<AbPresentation>,
    index: HashMap<PointedSetTuple, usize>,
    morphisms: HashMap<GammaEMorphism, IntMatrix>,
}

#[derive(Serialize, Deserialize)]
struct TabulatedJson {
    objects: Vec<PointedSetTuple>,
    values: Vec<AbPresentation>,
    morphisms: Vec<MorphismEntry>,
}

impl TabulatedFunctor {
    pub fn new(
        objects: Vec<PointedSetTuple>,
        values: Vec<AbPresentation>,
        morphisms: impl IntoIterator<Item = (GammaEMorphism, IntMatrix)>,
    ) -> Result<Self> {
        if objects.len() != values.len() {
            return Err(structural("one value per object expected"));
        }
        let index: HashMap<PointedSetTuple, usize> = objects.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();
        if index.len() != objects.len() {
            return Err(structural("repeated object in diagram"));
        }
        let t = TabulatedFunctor {
            objects,
            values,
            index,
            morphisms: morphisms.into_iter().collect(),
        };
        t.validate()?;
        Ok(t)
    }

    /// Tabulates `t` on `objects` and every morphism between them.
    pub fn from_functor(t: &dyn GammaFunctor, objects: Vec<PointedSetTuple>) -> Result<Self> {
        let values = objects.iter().map(|x| t.value(x)).collect::<Result<Vec<_>>>()?;
        let mut morphisms = Vec::new();
        for x in &objects {
            for y in &objects {
                for f in GammaEMorphism::all(x, y) {
                    let m = t.act(&f)?;
                    morphisms.push((f, m));
                }
            }
        }
        Self::new(objects, values, morphisms)
    }

    pub fn objects(&self) -> &[PointedSetTuple] {
        &self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    fn value_of(&self, x: &PointedSetTuple) -> Result<&AbPresentation> {
        self.index
            .get(x)
            .map(|&i| &self.values[i])
            .ok_or_else(|| Error::DiagramIncomplete(format!("no value at {x}")))
    }

    /// Shapes, relations, identities and composition, all modulo the
    /// relations of the values.
    pub fn validate(&self) -> Result<()> {
        for (f, m) in &self.morphisms {
            let (vx, vy) = (self.value_of(&f.source)?, self.value_of(&f.target)?);
            if m.rows() != vy.gens || m.cols() != vx.gens {
                return Err(Error::Validation(format!("matrix of {f:?} has the wrong shape")));
            }
            if !vx.relation_lattice().contains_rows(&(&vy.relations * m)) {
                return Err(Error::Validation(format!("matrix of {f:?} does not respect relations")));
            }
            if f.is_identity() && !vx.maps_equal_mod(m, &IntMatrix::identity(vx.gens)) {
                return Err(Error::Validation(format!("identity at {} is not sent to the identity", f.source)));
            }
        }
        let mut by_source: HashMap<&PointedSetTuple, Vec<&GammaEMorphism>> = HashMap::new();
        for f in self.morphisms.keys() {
            by_source.entry(&f.source).or_default().push(f);
        }
        for (f, mf) in &self.morphisms {
            let vx = self.value_of(&f.source)?;
            for g in by_source.get(&f.target).into_iter().flatten() {
                let gf = g.compose(f)?;
                if let Some(mgf) = self.morphisms.get(&gf) {
                    if !vx.maps_equal_mod(mgf, &(&self.morphisms[*g] * mf)) {
                        return Err(Error::Validation(format!("composition fails for {g:?} ∘ {f:?}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut morphisms: Vec<MorphismEntry> = self
            .morphisms
            .iter()
            .map(|(f, m)| MorphismEntry {
                morphism: f.clone(),
                matrix: m.clone(),
            })
            .collect();
        morphisms.sort_by(|a, b| a.morphism.cmp(&b.morphism));
        serde_json::to_string(&TabulatedJson {
            objects: self.objects.clone(),
            values: self.values.clone(),
            morphisms,
        })
        .expect("tabulated functors serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: TabulatedJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(j.objects, j.values, j.morphisms.into_iter().map(|e| (e.morphism, e.matrix)))
    }
}

impl GammaFunctor for TabulatedFunctor {
    fn value(&self, x: &PointedSetTuple) -> Result<AbPresentation> {
        self.value_of(x).cloned()
    }

    fn act(&self, f: &GammaEMorphism) -> Result<IntMatrix> {
        self.morphisms
            .get(f)
            .cloned()
            .ok_or_else(|| Error::DiagramIncomplete(format!("no matrix for {} -> {}", f.source, f.target)))
    }
}

/// Every tuple lying coordinatewise below one of `tops`.
pub fn downward_closure(tops: &[PointedSetTuple]) -> Vec<PointedSetTuple> {
    let mut out = BTreeSet::new();
    for t in tops {
        let mut acc = vec![Vec::new()];
        for &n in &t.sizes {
            acc = acc
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..=n).map(move |k| {
                        let mut q = p.clone();
                        q.push(k);
                        q
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(PointedSetTuple::new));
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::library::LibraryFunctor;

    #[test]
    fn tabulate_and_round_trip() {
        let objs = downward_closure(&[PointedSetTuple::new(vec![1, 1])]);
        assert_eq!(objs.len(), 4);
        let t = LibraryFunctor::tensor(LibraryFunctor::additive(2), LibraryFunctor::Linear(0));
        let tab = TabulatedFunctor::from_functor(&t, objs).unwrap();
        let back = TabulatedFunctor::from_json(&tab.to_json()).unwrap();
        assert_eq!(back.morphism_count(), tab.morphism_count());
        let f = GammaEMorphism::identity(&PointedSetTuple::new(vec![1, 1]));
        assert_eq!(back.act(&f).unwrap(), t.act(&f).unwrap());
        let outside = PointedSetTuple::new(vec![2, 0]);
        assert!(matches!(back.value(&outside), Err(Error::DiagramIncomplete(_))));
    }

    #[test]
    fn non_functorial_table_rejected() {
        let x = PointedSetTuple::new(vec![1]);
        let zero = PointedSetTuple::base(1);
        let mut entries: Vec<(GammaEMorphism, IntMatrix)> = Vec::new();
        for a in [&x, &zero] {
            for b in [&x, &zero] {
                for f in GammaEMorphism::all(a, b) {
                    let m = IntMatrix::zeros(b.sizes[0], a.sizes[0]);
                    entries.push((f, m));
                }
            }
        }
        // The zero matrix on the identity of `x` is not the identity.
        let err = TabulatedFunctor::new(
            vec![x.clone(), zero.clone()],
            vec![AbPresentation::free(1), AbPresentation::free(0)],
            entries,
        );
        assert!(matches!(err, Err(Error::Validation(_))));
    }
}
