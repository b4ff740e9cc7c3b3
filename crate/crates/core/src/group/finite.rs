//! Finite groups given by multiplication tables.

use std::collections::VecDeque;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{structural, Error, Result};
use crate::homology::{AbPresentation, FgAbGroup, IntMatrix};

/// A finite group on the elements `0..order`, identity at `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteGroup {
    name: String,
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table (group axioms, identity at 0).
    pub fn from_table(name: impl Into<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return Err(structural("a group has at least one element"));
        }
        if mult.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(structural("multiplication table must be n x n with entries in 0..n"));
        }
        for (a, row) in mult.iter().enumerate() {
            if row[0] != a || mult[0][a] != a {
                return Err(structural("element 0 must be the identity"));
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            let Some(b) = (0..n).find(|&b| mult[a][b] == 0) else {
                return Err(structural(format!("element {a} has no inverse")));
            };
            if mult[b][a] != 0 {
                return Err(structural(format!("inverse of {a} is not two-sided")));
            }
            inv[a] = b;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mult[a][b];
                for c in 0..n {
                    if mult[ab][c] != mult[a][mult[b][c]] {
                        return Err(structural(format!("multiplication is not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            mult,
            inv,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(format!("Z{n}"), mult).expect("cyclic table")
    }

    pub fn klein() -> Self {
        let mult = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Self::from_table("Z2xZ2", mult).expect("Klein table")
    }

    /// `S_3`, elements listed as permutations of `{0,1,2}` in lexicographic
    /// order (so the identity comes first).
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        // (a*b)(x) = a(b(x))
        let mult = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        Self::from_table("S3", mult).expect("S3 table")
    }

    /// Direct product; element `(a, b)` is `a * other.order() + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let n = self.order() * m;
        let mult = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(format!("{}x{}", self.name, other.name), mult).expect("product table")
    }

    /// Built-in groups: `Z<n>` (also `Z/<n>`), `Z2xZ2` (also `V4`), `S3`.
    pub fn builtin(name: &str) -> Option<Self> {
        let compact: String = name.chars().filter(|c| !c.is_whitespace() && *c != '/').collect();
        match compact.to_ascii_uppercase().as_str() {
            "Z2XZ2" | "V4" => Some(Self::klein()),
            "S3" => Some(Self::symmetric3()),
            s => {
                let n: usize = s.strip_prefix('Z')?.parse().ok()?;
                (n > 0).then(|| Self::cyclic(n))
            }
        }
    }

    /// Parses the table format: a line `order n`, then `n` rows of `n`
    /// whitespace-separated indices.
    pub fn parse_table(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty group table".into()))?;
        let n: usize = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected `order n`, found `{header}`")))?;
        let mut mult = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing table row {i}")))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad entry `{t}` in row {i}"))))
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            mult.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing content `{extra}`")));
        }
        Self::from_table(name, mult)
    }

    pub fn load_table_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        Self::parse_table(name, &text)
    }

    /// A built-in name or, failing that, a table file path.
    pub fn resolve(spec: &str) -> Result<Self> {
        if let Some(g) = Self::builtin(spec) {
            return Ok(g);
        }
        let p = Path::new(spec);
        if p.exists() {
            return Self::load_table_file(p);
        }
        Err(Error::Parse(format!("unknown group `{spec}` (not a built-in and no such file)")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn nontrivial(&self) -> std::ops::Range<usize> {
        1..self.order()
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A small generating set, chosen greedily by element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = self.nontrivial().collect();
        by_order.sort_by_key(|&a| std::cmp::Reverse(self.element_order(a)));
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order()];
        reached[0] = true;
        for a in by_order {
            if reached[a] {
                continue;
            }
            gens.push(a);
            reached = self.closure(&gens);
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Presentation of the abelianization: one generator per element,
    /// relations `[a] + [b] = [ab]`.
    pub fn abelianization_presentation(&self) -> AbPresentation {
        let n = self.order();
        let mut rows = Vec::with_capacity(n * n + 1);
        let mut e0 = vec![0i64; n];
        e0[0] = 1;
        rows.push(e0);
        for a in 1..n {
            for b in 1..n {
                let mut r = vec![0i64; n];
                r[a] += 1;
                r[b] += 1;
                r[self.mul(a, b)] -= 1;
                rows.push(r);
            }
        }
        AbPresentation::new(n, IntMatrix::from_rows(&rows))
    }

    pub fn abelianization(&self) -> FgAbGroup {
        self.abelianization_presentation().group()
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
