//! Buffers the shuffles operate on.
//!
//! The algorithms only ever exchange two elements, so anything that can
//! swap by index is a valid target: plain slices, or a byte slice viewed as
//! a run of fixed-size records.

use crate::error::{Error, Result};

/// A sequence whose elements can be exchanged in place.
pub trait SwapBuffer {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exchanges elements `a` and `b` (0-based).
    fn swap(&mut self, a: usize, b: usize);
}

impl<T> SwapBuffer for [T] {
    #[inline]
    fn len(&self) -> usize {
        <[T]>::len(self)
    }

    #[inline]
    fn swap(&mut self, a: usize, b: usize) {
        <[T]>::swap(self, a, b)
    }
}

impl<T> SwapBuffer for Vec<T> {
    #[inline]
    fn len(&self) -> usize {
        Vec::len(self)
    }

    #[inline]
    fn swap(&mut self, a: usize, b: usize) {
        self.as_mut_slice().swap(a, b)
    }
}

/// A byte slice holding equal-size opaque records.
#[derive(Debug)]
pub struct RecordBuffer<'a> {
    bytes: &'a mut [u8],
    record_size: usize,
}

impl<'a> RecordBuffer<'a> {
    pub fn new(bytes: &'a mut [u8], record_size: usize) -> Result<Self> {
        if record_size == 0 || bytes.len() % record_size != 0 {
            return Err(Error::InvalidLength {
                len: bytes.len(),
                kind: format!("records of {record_size} bytes"),
            });
        }
        Ok(RecordBuffer { bytes, record_size })
    }

    pub fn record_size(&self) -> usize {
        self.record_size
    }

    pub fn record(&self, i: usize) -> &[u8] {
        &self.bytes[i * self.record_size..(i + 1) * self.record_size]
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.bytes
    }
}

impl SwapBuffer for RecordBuffer<'_> {
    #[inline]
    fn len(&self) -> usize {
        self.bytes.len() / self.record_size
    }

    fn swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let size = self.record_size;
        let (head, tail) = self.bytes.split_at_mut(hi * size);
        head[lo * size..(lo + 1) * size].swap_with_slice(&mut tail[..size]);
    }
}

/// A contiguous window `[start, start + len)` of another buffer.
pub struct SubBuffer<'a, B: ?Sized> {
    inner: &'a mut B,
    start: usize,
    len: usize,
}

impl<'a, B: SwapBuffer + ?Sized> SubBuffer<'a, B> {
    /// Panics if the window does not fit inside `inner`.
    pub fn new(inner: &'a mut B, start: usize, len: usize) -> Self {
        assert!(start + len <= inner.len(), "window exceeds buffer");
        SubBuffer { inner, start, len }
    }
}

impl<B: SwapBuffer + ?Sized> SwapBuffer for SubBuffer<'_, B> {
    #[inline]
    fn len(&self) -> usize {
        self.len
    }

    #[inline]
    fn swap(&mut self, a: usize, b: usize) {
        debug_assert!(a < self.len && b < self.len);
        self.inner.swap(self.start + a, self.start + b)
    }
}
