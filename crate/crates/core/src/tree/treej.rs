//! Planted bipartite labelled trees.
//!
//! A tree is stored through the mute neighbour of the root. Children are
//! kept sorted (labelled children by label, mute children by least label
//! in their subtree), so structural equality is equality of trees.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{structural, Error, Result};
use crate::group::Label;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuteNode {
    pub children: Vec<LabelledNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledNode {
    pub label: Label,
    pub children: Vec<MuteNode>,
}

impl MuteNode {
    pub fn min_label(&self) -> Label {
        self.children.iter().map(LabelledNode::min_label).min().expect("mute vertex without children")
    }

    fn normalize(&mut self) {
        for c in &mut self.children {
            c.normalize();
        }
        self.children.sort_by_key(|c| c.label);
    }

    pub fn labels(&self) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut BTreeSet<Label>) {
        for c in &self.children {
            out.insert(c.label);
            for m in &c.children {
                m.collect_labels(out);
            }
        }
    }

    fn count_mutes(&self) -> usize {
        1 + self.children.iter().flat_map(|c| &c.children).map(MuteNode::count_mutes).sum::<usize>()
    }
}

impl LabelledNode {
    fn min_label(&self) -> Label {
        self.children.iter().map(MuteNode::min_label).fold(self.label, Label::min)
    }

    fn normalize(&mut self) {
        for m in &mut self.children {
            m.normalize();
        }
        self.children.sort_by_key(MuteNode::min_label);
    }
}

/// An element of `J_E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeJ {
    top: MuteNode,
}

impl TreeJ {
    /// Validates and normalizes: every mute vertex has a child, labels are
    /// distinct, and there is at least one label.
    pub fn from_top(mut top: MuteNode) -> Result<Self> {
        fn walk(m: &MuteNode, seen: &mut BTreeSet<Label>) -> Result<()> {
            if m.children.is_empty() {
                return Err(structural("a mute vertex is a leaf"));
            }
            for c in &m.children {
                if !seen.insert(c.label) {
                    return Err(structural(format!("label {} occurs twice", c.label)));
                }
                for k in &c.children {
                    walk(k, seen)?;
                }
            }
            Ok(())
        }
        walk(&top, &mut BTreeSet::new())?;
        top.normalize();
        Ok(TreeJ { top })
    }

    pub fn top(&self) -> &MuteNode {
        &self.top
    }

    pub fn labels(&self) -> BTreeSet<Label> {
        self.top.labels()
    }

    pub fn mute_count(&self) -> usize {
        self.top.count_mutes()
    }

    /// Deterministic key; equal keys iff equal trees.
    pub fn canonical_key(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser {
            s: text.as_bytes(),
            i: 0,
        };
        p.expect(b'(')?;
        p.expect(b'*')?;
        let top = p.mute()?;
        p.expect(b')')?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(p.err("trailing input"));
        }
        TreeJ::from_top(top)
    }

    pub fn to_flat(&self) -> FlatTree {
        let mut f = FlatTree {
            mute_parent: Vec::new(),
            label_parent: BTreeMap::new(),
        };
        fn go(m: &MuteNode, parent: Option<Label>, f: &mut FlatTree) {
            let id = f.mute_parent.len();
            f.mute_parent.push(Some(parent));
            for c in &m.children {
                f.label_parent.insert(c.label, id);
                for k in &c.children {
                    go(k, Some(c.label), f);
                }
            }
        }
        go(&self.top, None, &mut f);
        f
    }

    pub fn to_json(&self) -> TreeJson {
        let mut nodes = vec![NodeJson {
            id: 0,
            kind: "root".into(),
            label: None,
            parent: None,
        }];
        fn go(m: &MuteNode, parent: usize, nodes: &mut Vec<NodeJson>) {
            let id = nodes.len();
            nodes.push(NodeJson {
                id,
                kind: "mute".into(),
                label: None,
                parent: Some(parent),
            });
            for c in &m.children {
                let cid = nodes.len();
                nodes.push(NodeJson {
                    id: cid,
                    kind: "labelled".into(),
                    label: Some(c.label),
                    parent: Some(id),
                });
                for k in &c.children {
                    go(k, cid, nodes);
                }
            }
        }
        go(&self.top, 0, &mut nodes);
        TreeJson {
            text: self.to_string(),
            nodes,
        }
    }
}

impl fmt::Display for TreeJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn mute(m: &MuteNode, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("(m")?;
            for c in &m.children {
                write!(f, "({}", c.label)?;
                for k in &c.children {
                    mute(k, f)?;
                }
                f.write_str(")")?;
            }
            f.write_str(")")
        }
        f.write_str("(*")?;
        mute(&self.top, f)?;
        f.write_str(")")
    }
}

impl Serialize for TreeJ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TreeJ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TreeJson::deserialize(d)?;
        TreeJ::parse(&j.text).map_err(serde::de::Error::custom)
    }
}

/// JSON export: the text form plus an explicit node list.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TreeJson {
    pub text: String,
    #[serde(default)]
    pub nodes: Vec<NodeJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<Label>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parent: Option<usize>,
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("tree text, byte {}: {what}", self.i))
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn mute(&mut self) -> Result<MuteNode> {
        self.expect(b'(')?;
        self.expect(b'm')?;
        let mut children = Vec::new();
        while self.peek() == Some(b'(') {
            children.push(self.labelled()?);
        }
        self.expect(b')')?;
        Ok(MuteNode { children })
    }

    fn labelled(&mut self) -> Result<LabelledNode> {
        self.expect(b'(')?;
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        let label: Label = std::str::from_utf8(&self.s[start..self.i])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected a label"))?;
        let mut children = Vec::new();
        while self.peek() == Some(b'(') {
            children.push(self.mute()?);
        }
        self.expect(b')')?;
        Ok(LabelledNode { label, children })
    }
}

/// Parent-pointer form used to apply local moves. Mute vertex `0` is the
/// root's neighbour; removed mute vertices have `mute_parent[k] = None`.
#[derive(Clone, Debug)]
pub struct FlatTree {
    /// `Some(None)`: child of the root; `Some(Some(l))`: child of label `l`.
    pub mute_parent: Vec<Option<Option<Label>>>,
    pub label_parent: BTreeMap<Label, usize>,
}

impl FlatTree {
    pub fn child_mutes(&self, l: Label) -> Vec<usize> {
        (0..self.mute_parent.len())
            .filter(|&k| self.mute_parent[k] == Some(Some(l)))
            .collect()
    }

    pub fn child_labels(&self, m: usize) -> Vec<Label> {
        self.label_parent.iter().filter(|(_, &p)| p == m).map(|(&l, _)| l).collect()
    }

    /// Identifies mute vertex `from` with `into`: its labelled children move
    /// to `into` and `from` disappears.
    pub fn merge_mutes(&mut self, into: usize, from: usize) {
        for p in self.label_parent.values_mut() {
            if *p == from {
                *p = into;
            }
        }
        self.mute_parent[from] = None;
    }

    pub fn to_tree(&self) -> Result<TreeJ> {
        fn build(f: &FlatTree, m: usize) -> MuteNode {
            let children = f
                .child_labels(m)
                .into_iter()
                .map(|l| LabelledNode {
                    label: l,
                    children: f.child_mutes(l).into_iter().map(|k| build(f, k)).collect(),
                })
                .collect();
            MuteNode { children }
        }
        if self.mute_parent.first() != Some(&Some(None)) {
            return Err(structural("flat tree lost the root's mute neighbour"));
        }
        TreeJ::from_top(build(self, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_and_normalization() {
        let t = TreeJ::parse("(*(m(2)(1(m(3)))))").unwrap();
        assert_eq!(t.to_string(), "(*(m(1(m(3)))(2)))");
        assert_eq!(TreeJ::parse(&t.to_string()).unwrap(), t);
        let spaced = TreeJ::parse(" ( * ( m (1) (2) ) ) ").unwrap();
        assert_eq!(spaced.to_string(), "(*(m(1)(2)))");
    }

    #[test]
    fn rejects_invalid_trees() {
        assert!(TreeJ::parse("(*(m))").is_err());
        assert!(TreeJ::parse("(*(m(1)(1)))").is_err());
        assert!(TreeJ::parse("(*(m(1(m))))").is_err());
        assert!(TreeJ::parse("(*(m(1))").is_err());
        assert!(TreeJ::parse("(*(m(x)))").is_err());
    }

    #[test]
    fn json_has_explicit_nodes() {
        let t = TreeJ::parse("(*(m(1(m(2)))))").unwrap();
        let j = serde_json::to_value(&t).unwrap();
        assert_eq!(j["nodes"].as_array().unwrap().len(), 5);
        let back: TreeJ = serde_json::from_value(j).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn flat_round_trip() {
        let t = TreeJ::parse("(*(m(1(m(2)(3))(m(4)))))").unwrap();
        assert_eq!(t.to_flat().to_tree().unwrap(), t);
        assert_eq!(t.mute_count(), 3);
    }
}
