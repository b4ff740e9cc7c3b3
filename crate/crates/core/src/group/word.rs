//! Elements of a free product of finite groups in normal form.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::family::{GroupFamily, Label};
use crate::error::{structural, Result};

/// A reduced word: no identity letters, no two adjacent letters from the
/// same factor. Every constructor returns a reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<(Label, usize)>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(label: Label, g: usize, fam: &GroupFamily) -> Result<Self> {
        Self::from_letters([(label, g)], fam)
    }

    /// Normal form of the product of the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = (Label, usize)>, fam: &GroupFamily) -> Result<Self> {
        let mut w = Word::empty();
        for (l, g) in letters {
            w.push(l, g, fam)?;
        }
        Ok(w)
    }

    fn push(&mut self, label: Label, g: usize, fam: &GroupFamily) -> Result<()> {
        let grp = fam.factor(label)?;
        if g >= grp.order() {
            return Err(structural(format!("element {g} is not in factor {label} of order {}", grp.order())));
        }
        if g == 0 {
            return Ok(());
        }
        match self.0.last_mut() {
            Some((l, h)) if *l == label => {
                let p = grp.mul(*h, g);
                if p == 0 {
                    self.0.pop();
                } else {
                    *h = p;
                }
            }
            _ => self.0.push((label, g)),
        }
        Ok(())
    }

    pub fn letters(&self) -> &[(Label, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word, fam: &GroupFamily) -> Result<Word> {
        let mut w = self.clone();
        for &(l, g) in &other.0 {
            w.push(l, g, fam)?;
        }
        Ok(w)
    }

    pub fn inverse(&self, fam: &GroupFamily) -> Result<Word> {
        let mut out = Vec::with_capacity(self.0.len());
        for &(l, g) in self.0.iter().rev() {
            out.push((l, fam.factor(l)?.inv(g)));
        }
        Ok(Word(out))
    }

    /// `self * x * self^{-1}`.
    pub fn conjugate(&self, x: &Word, fam: &GroupFamily) -> Result<Word> {
        self.mul(x, fam)?.mul(&self.inverse(fam)?, fam)
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.0.iter().map(|&(l, _)| l)
    }
}

/// Free-product multiplication of normal-form words.
pub fn word_mul(a: &Word, b: &Word, fam: &GroupFamily) -> Result<Word> {
    a.mul(b, fam)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (l, g)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}:{g}")?;
        }
        Ok(())
    }
}
