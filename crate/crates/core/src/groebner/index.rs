//! Trie over leading words for divisor lookup.

use crate::freealg::Var;

#[derive(Clone, Debug, Default)]
struct Node {
    children: Vec<(Var, u32)>,
    elem: Option<usize>,
}

/// Maps leading words to element ids. Supports lookup of the leftmost,
/// shortest stored word occurring in a query word, and of the shortest
/// stored prefix.
#[derive(Clone, Debug)]
pub(crate) struct LmIndex {
    nodes: Vec<Node>,
    count: usize,
}

impl Default for LmIndex {
    fn default() -> Self {
        LmIndex {
            nodes: vec![Node::default()],
            count: 0,
        }
    }
}

impl LmIndex {
    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.count
    }

    fn child(&self, node: usize, v: Var) -> Option<usize> {
        self.nodes[node]
            .children
            .iter()
            .find(|(w, _)| *w == v)
            .map(|&(_, n)| n as usize)
    }

    /// Stores `w ↦ id`; keeps an existing entry for the same word.
    pub fn insert(&mut self, w: &[Var], id: usize) -> bool {
        let mut node = 0;
        for &v in w {
            node = match self.child(node, v) {
                Some(n) => n,
                None => {
                    let n = self.nodes.len();
                    self.nodes.push(Node::default());
                    self.nodes[node].children.push((v, n as u32));
                    n
                }
            };
        }
        if self.nodes[node].elem.is_some() {
            return false;
        }
        self.nodes[node].elem = Some(id);
        self.count += 1;
        true
    }

    pub fn remove(&mut self, w: &[Var]) -> Option<usize> {
        let mut node = 0;
        for &v in w {
            node = self.child(node, v)?;
        }
        let out = self.nodes[node].elem.take();
        if out.is_some() {
            self.count -= 1;
        }
        out
    }

    /// Shortest stored word that is a prefix of `w`.
    pub fn find_prefix(&self, w: &[Var]) -> Option<(usize, usize)> {
        let mut node = 0;
        if let Some(id) = self.nodes[0].elem {
            return Some((id, 0));
        }
        for (k, &v) in w.iter().enumerate() {
            node = self.child(node, v)?;
            if let Some(id) = self.nodes[node].elem {
                return Some((id, k + 1));
            }
        }
        None
    }

    /// Leftmost occurrence of a stored word in `w`, shortest among those
    /// starting there. Returns `(id, position)`.
    pub fn find(&self, w: &[Var]) -> Option<(usize, usize)> {
        (0..=w.len()).find_map(|p| self.find_prefix(&w[p..]).map(|(id, _)| (id, p)))
    }
}
