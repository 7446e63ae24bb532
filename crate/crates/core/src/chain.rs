//! Arena-backed singly linked lists with O(1) push and O(1) destructive
//! concatenation. Used for the vertex sets and edge sets of supervertices.

use alloc::vec::Vec;

const NIL: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Node<T> {
    value: T,
    next: u32,
}

/// Storage shared by all chains of one element type.
#[derive(Clone, Debug)]
pub struct ChainArena<T> {
    nodes: Vec<Node<T>>,
}

/// Handle to one list inside a [`ChainArena`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chain {
    head: u32,
    tail: u32,
    len: usize,
}

impl Default for Chain {
    fn default() -> Self {
        Chain::new()
    }
}

impl Chain {
    pub const fn new() -> Self {
        Chain {
            head: NIL,
            tail: NIL,
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push<T>(&mut self, arena: &mut ChainArena<T>, value: T) {
        let id = arena.nodes.len() as u32;
        arena.nodes.push(Node { value, next: NIL });
        if self.tail == NIL {
            self.head = id;
        } else {
            arena.nodes[self.tail as usize].next = id;
        }
        self.tail = id;
        self.len += 1;
    }

    /// Moves every element of `other` to the end of `self`; `other` is left empty.
    pub fn append<T>(&mut self, arena: &mut ChainArena<T>, other: &mut Chain) {
        if other.head == NIL {
            return;
        }
        if self.tail == NIL {
            self.head = other.head;
        } else {
            arena.nodes[self.tail as usize].next = other.head;
        }
        self.tail = other.tail;
        self.len += other.len;
        *other = Chain::new();
    }

    pub fn iter<'a, T>(&self, arena: &'a ChainArena<T>) -> ChainIter<'a, T> {
        ChainIter {
            arena,
            cursor: self.head,
            remaining: self.len,
        }
    }
}

impl<T> Default for ChainArena<T> {
    fn default() -> Self {
        ChainArena { nodes: Vec::new() }
    }
}

impl<T> ChainArena<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(cap: usize) -> Self {
        ChainArena {
            nodes: Vec::with_capacity(cap),
        }
    }

    /// Total number of nodes ever pushed.
    pub fn allocated(&self) -> usize {
        self.nodes.len()
    }
}

pub struct ChainIter<'a, T> {
    arena: &'a ChainArena<T>,
    cursor: u32,
    remaining: usize,
}

impl<'a, T> Iterator for ChainIter<'a, T> {
    type Item = &'a T;

    fn next(&mut self) -> Option<&'a T> {
        if self.remaining == 0 {
            return None;
        }
        let node = &self.arena.nodes[self.cursor as usize];
        self.cursor = node.next;
        self.remaining -= 1;
        Some(&node.value)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl<T> ExactSizeIterator for ChainIter<'_, T> {}
