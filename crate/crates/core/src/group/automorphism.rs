//! Symmetric automorphisms of a free product, stored as
//! `(perm, conj, iso)`: the factor `G_e` is sent to
//! `conj(e) * iso_e(G_e) * conj(e)^{-1}` inside `G_{perm(e)}`'s conjugate.
//!
//! The data is kept canonical (a conjugator never ends with a letter of its
//! target factor, and trivial factors carry empty conjugators), so two
//! automorphisms are equal exactly when their data is.

use std::fmt;
use std::hash::{Hash, Hasher};

use super::family::{GroupFamily, Label};
use super::iso::{compose_tables, invert_table};
use super::word::Word;
use crate::error::{structural, Error, Result};

/// Raw automorphism data indexed by family position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AutData {
    /// `perm[p]` is the position of the factor receiving factor `p`.
    pub perm: Vec<usize>,
    pub conj: Vec<Word>,
    /// `iso[p]` maps elements of factor `p` to factor `perm[p]`.
    pub iso: Vec<Vec<usize>>,
}

impl AutData {
    fn identity(fam: &GroupFamily) -> Self {
        AutData {
            perm: (0..fam.len()).collect(),
            conj: vec![Word::empty(); fam.len()],
            iso: fam.factors().iter().map(|g| g.elements().collect()).collect(),
        }
    }

    fn check_shape(&self, fam: &GroupFamily) -> Result<()> {
        let n = fam.len();
        if self.perm.len() != n || self.conj.len() != n || self.iso.len() != n {
            return Err(structural("automorphism data does not match the family size"));
        }
        let mut hit = vec![false; n];
        for &q in &self.perm {
            if q >= n || std::mem::replace(&mut hit[q], true) {
                return Err(structural("perm is not a permutation of the labels"));
            }
        }
        for (p, t) in self.iso.iter().enumerate() {
            let (g, h) = (&fam.factors()[p], &fam.factors()[self.perm[p]]);
            if t.len() != g.order() || g.order() != h.order() {
                return Err(structural(format!("iso table at label {} has the wrong size", fam.labels()[p])));
            }
            let mut seen = vec![false; t.len()];
            for &y in t {
                if y >= t.len() || std::mem::replace(&mut seen[y], true) {
                    return Err(structural(format!("iso table at label {} is not bijective", fam.labels()[p])));
                }
            }
            let hom = g.elements().all(|x| g.elements().all(|y| t[g.mul(x, y)] == h.mul(t[x], t[y])));
            if !hom {
                return Err(structural(format!("iso table at label {} is not multiplicative", fam.labels()[p])));
            }
        }
        for w in &self.conj {
            for l in w.labels() {
                fam.position(l)?;
            }
        }
        Ok(())
    }

    /// Moves a trailing letter of the target factor from the conjugator
    /// into the iso table.
    fn canonicalize(mut self, fam: &GroupFamily) -> Result<Self> {
        for p in 0..self.perm.len() {
            let q = self.perm[p];
            let target = &fam.factors()[q];
            let tl = fam.labels()[q];
            if target.order() == 1 {
                self.conj[p] = Word::empty();
                continue;
            }
            if let Some(&(l, x)) = self.conj[p].letters().last() {
                if l == tl {
                    let xi = target.inv(x);
                    self.iso[p] = self.iso[p].iter().map(|&y| target.mul(target.mul(x, y), xi)).collect();
                    let strip = Word::letter(l, xi, fam)?;
                    self.conj[p] = self.conj[p].mul(&strip, fam)?;
                }
            }
        }
        Ok(self)
    }

    fn image_of_letter(&self, p: usize, g: usize, fam: &GroupFamily) -> Result<Word> {
        let q = self.perm[p];
        let core = Word::letter(fam.labels()[q], self.iso[p][g], fam)?;
        self.conj[p].conjugate(&core, fam)
    }

    fn apply(&self, w: &Word, fam: &GroupFamily) -> Result<Word> {
        let mut out = Word::empty();
        for &(l, g) in w.letters() {
            let p = fam.position(l)?;
            out = out.mul(&self.image_of_letter(p, g, fam)?, fam)?;
        }
        Ok(out)
    }

    /// Data of `self ∘ other`.
    fn compose(&self, other: &AutData, fam: &GroupFamily) -> Result<AutData> {
        let n = self.perm.len();
        let mut perm = Vec::with_capacity(n);
        let mut conj = Vec::with_capacity(n);
        let mut iso = Vec::with_capacity(n);
        for p in 0..n {
            let mid = other.perm[p];
            perm.push(self.perm[mid]);
            conj.push(self.apply(&other.conj[p], fam)?.mul(&self.conj[mid], fam)?);
            iso.push(compose_tables(&self.iso[mid], &other.iso[p]));
        }
        AutData { perm, conj, iso }.canonicalize(fam)
    }
}

/// A symmetric automorphism together with its inverse.
#[derive(Clone, Debug)]
pub struct SymmetricAutomorphism {
    fwd: AutData,
    inv: AutData,
}

impl PartialEq for SymmetricAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.fwd == other.fwd
    }
}

impl Eq for SymmetricAutomorphism {}

impl Hash for SymmetricAutomorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.fwd.hash(state);
    }
}

impl SymmetricAutomorphism {
    pub fn identity(fam: &GroupFamily) -> Self {
        let d = AutData::identity(fam);
        SymmetricAutomorphism { fwd: d.clone(), inv: d }
    }

    /// Builds an automorphism from forward data and a claimed inverse; both
    /// composites are checked to fix every single-letter word.
    pub fn from_parts(forward: AutData, inverse: AutData, fam: &GroupFamily) -> Result<Self> {
        forward.check_shape(fam)?;
        inverse.check_shape(fam)?;
        let a = SymmetricAutomorphism {
            fwd: forward.canonicalize(fam)?,
            inv: inverse.canonicalize(fam)?,
        };
        let round = a.fwd.compose(&a.inv, fam)?;
        let back = a.inv.compose(&a.fwd, fam)?;
        let id = AutData::identity(fam);
        if round != id || back != id {
            return Err(structural("the given inverse data does not invert the automorphism"));
        }
        Ok(a)
    }

    /// Conjugates factor `j` by `g ∈ G_i`. With `i == j` this is the inner
    /// automorphism of `G_j` by `g`, which lies outside FR; see
    /// [`whitehead_generator`] for the checked version.
    pub fn partial_conjugation(i: Label, j: Label, g: usize, fam: &GroupFamily) -> Result<Self> {
        let pj = fam.position(j)?;
        let gi = fam.factor(i)?;
        if g >= gi.order() {
            return Err(structural(format!("element {g} is not in factor {i}")));
        }
        let mut fwd = AutData::identity(fam);
        let mut inv = fwd.clone();
        fwd.conj[pj] = Word::letter(i, g, fam)?;
        inv.conj[pj] = Word::letter(i, gi.inv(g), fam)?;
        Ok(SymmetricAutomorphism {
            fwd: fwd.canonicalize(fam)?,
            inv: inv.canonicalize(fam)?,
        })
    }

    /// Applies the automorphism `theta` of `G_e` and fixes the other factors.
    pub fn factor_automorphism(e: Label, theta: &[usize], fam: &GroupFamily) -> Result<Self> {
        let p = fam.position(e)?;
        let mut fwd = AutData::identity(fam);
        let mut inv = fwd.clone();
        fwd.iso[p] = theta.to_vec();
        inv.iso[p] = invert_table(theta);
        fwd.check_shape(fam)?;
        Ok(SymmetricAutomorphism { fwd, inv })
    }

    /// Sends `G_e` onto `G_{sigma(e)}` through `isos[e]` (indexed by
    /// position), with trivial conjugators.
    pub fn permutation(sigma: &[usize], isos: Vec<Vec<usize>>, fam: &GroupFamily) -> Result<Self> {
        let fwd = AutData {
            perm: sigma.to_vec(),
            conj: vec![Word::empty(); fam.len()],
            iso: isos,
        };
        fwd.check_shape(fam)?;
        let n = fam.len();
        let mut perm = vec![0; n];
        let mut iso = vec![Vec::new(); n];
        for p in 0..n {
            perm[sigma[p]] = p;
            iso[sigma[p]] = invert_table(&fwd.iso[p]);
        }
        let inv = AutData {
            perm,
            conj: vec![Word::empty(); n],
            iso,
        };
        Ok(SymmetricAutomorphism { fwd, inv })
    }

    /// Swaps two labels whose factors have identical tables.
    pub fn transposition(a: Label, b: Label, fam: &GroupFamily) -> Result<Self> {
        let (pa, pb) = (fam.position(a)?, fam.position(b)?);
        if fam.factors()[pa].table() != fam.factors()[pb].table() {
            return Err(structural(format!("factors {a} and {b} do not share a multiplication table")));
        }
        let mut sigma: Vec<usize> = (0..fam.len()).collect();
        sigma.swap(pa, pb);
        let isos = fam.factors().iter().map(|g| g.elements().collect()).collect();
        Self::permutation(&sigma, isos, fam)
    }

    pub fn compose(&self, other: &SymmetricAutomorphism, fam: &GroupFamily) -> Result<Self> {
        Ok(SymmetricAutomorphism {
            fwd: self.fwd.compose(&other.fwd, fam)?,
            inv: other.inv.compose(&self.inv, fam)?,
        })
    }

    pub fn inverse(&self) -> Self {
        SymmetricAutomorphism {
            fwd: self.inv.clone(),
            inv: self.fwd.clone(),
        }
    }

    /// `self * other * self^{-1}`.
    pub fn conjugate(&self, other: &SymmetricAutomorphism, fam: &GroupFamily) -> Result<Self> {
        self.compose(other, fam)?.compose(&self.inverse(), fam)
    }

    pub fn apply(&self, w: &Word, fam: &GroupFamily) -> Result<Word> {
        if self.fwd.perm.len() != fam.len() {
            return Err(structural("automorphism and family have different sizes"));
        }
        self.fwd.apply(w, fam)
    }

    pub fn data(&self) -> &AutData {
        &self.fwd
    }

    pub fn inverse_data(&self) -> &AutData {
        &self.inv
    }

    pub fn perm_label(&self, e: Label, fam: &GroupFamily) -> Result<Label> {
        Ok(fam.labels()[self.fwd.perm[fam.position(e)?]])
    }

    pub fn conj(&self, e: Label, fam: &GroupFamily) -> Result<&Word> {
        Ok(&self.fwd.conj[fam.position(e)?])
    }

    pub fn iso(&self, e: Label, fam: &GroupFamily) -> Result<&[usize]> {
        Ok(&self.fwd.iso[fam.position(e)?])
    }

    pub fn is_identity(&self) -> bool {
        self.fwd.perm.iter().enumerate().all(|(p, &q)| p == q)
            && self.fwd.conj.iter().all(Word::is_empty)
            && self.fwd.iso.iter().all(|t| t.iter().enumerate().all(|(x, &y)| x == y))
    }

    /// Images of every single-letter word `(e, g)`, `g != 1`, in label
    /// order. Two automorphisms agree iff their signatures do.
    pub fn action_signature(&self, fam: &GroupFamily) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        for (p, g) in fam.factors().iter().enumerate() {
            for x in g.nontrivial() {
                out.push(self.fwd.image_of_letter(p, x, fam)?);
            }
        }
        Ok(out)
    }

    /// Checks that the stored inverse undoes the automorphism on every
    /// single-letter word, by direct evaluation.
    pub fn verify_inverse(&self, fam: &GroupFamily) -> Result<()> {
        for (l, g) in fam.iter() {
            for x in g.nontrivial() {
                let w = Word::letter(l, x, fam)?;
                let there = self.fwd.apply(&w, fam)?;
                if self.inv.apply(&there, fam)? != w || self.fwd.apply(&self.inv.apply(&w, fam)?, fam)? != w {
                    return Err(Error::Verification(format!("inverse fails on letter {l}:{x}")));
                }
            }
        }
        Ok(())
    }

    pub fn display(&self, fam: &GroupFamily) -> String {
        AutDisplay(self, fam).to_string()
    }
}

struct AutDisplay<'a>(&'a SymmetricAutomorphism, &'a GroupFamily);

impl fmt::Display for AutDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, fam) = (self.0, self.1);
        let parts: Vec<String> = (0..fam.len())
            .map(|p| {
                format!(
                    "{}->{}[{}]{:?}",
                    fam.labels()[p],
                    fam.labels()[a.fwd.perm[p]],
                    a.fwd.conj[p],
                    a.fwd.iso[p]
                )
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// The partial conjugation `α_{i,j}^g`, sending `γ ∈ G_j` to `g γ g^{-1}`
/// for `g ∈ G_i`, `i != j`.
pub fn whitehead_generator(i: Label, j: Label, g: usize, fam: &GroupFamily) -> Result<SymmetricAutomorphism> {
    if i == j {
        return Err(structural(format!(
            "whitehead_generator needs distinct labels, got i = j = {i}"
        )));
    }
    SymmetricAutomorphism::partial_conjugation(i, j, g, fam)
}

/// Applies `φ` to `w`.
pub fn apply_automorphism(phi: &SymmetricAutomorphism, w: &Word, fam: &GroupFamily) -> Result<Word> {
    phi.apply(w, fam)
}
