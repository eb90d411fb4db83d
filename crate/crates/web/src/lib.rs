//! Browser bindings for the shuffle demo in `www/`.
//!
//! The `wasm_bindgen` exports are thin wrappers over plain Rust functions so
//! the same logic is testable on the host.

use inshuffle::cli::cmd_cycles;
use inshuffle::{in_shuffle, Instrumentation, NoMeter, ShuffleKind};
use inshuffle::{plan_blocks, shuffle::cycle_leader_pass, shuffle::gather_rotate};
use wasm_bindgen::prelude::*;

/// Snapshots of a deck taken after each stage of the in-shuffle.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Trace {
    len: usize,
    frames: Vec<u32>,
    labels: Vec<String>,
}

#[wasm_bindgen]
impl Trace {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn frame_count(&self) -> usize {
        self.labels.len()
    }

    /// Card values (1-based original positions) in frame `i`.
    pub fn frame(&self, i: usize) -> Vec<u32> {
        self.frames[i * self.len..(i + 1) * self.len].to_vec()
    }

    pub fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }
}

impl Trace {
    fn push(&mut self, deck: &[u32], label: String) {
        self.frames.extend_from_slice(deck);
        self.labels.push(label);
    }
}

pub const MAX_TRACE_LEN: usize = 512;

/// Runs the block loop stage by stage on the deck `1..=len`.
pub fn trace(len: usize) -> Result<Trace, String> {
    if len > MAX_TRACE_LEN {
        return Err(format!("deck is limited to {MAX_TRACE_LEN} cards"));
    }
    let plan = plan_blocks(len).map_err(|e| e.to_string())?;
    let mut deck: Vec<u32> = (1..=len as u32).collect();
    let mut out = Trace {
        len,
        frames: Vec::new(),
        labels: Vec::new(),
    };
    out.push(&deck, "start".into());
    for block in &plan.blocks {
        let n = (len - block.offset) / 2;
        if block.m < n {
            gather_rotate(&mut deck[..], block.offset, n, block.m, &mut NoMeter)
                .map_err(|e| e.to_string())?;
            out.push(
                &deck,
                format!(
                    "gather: rotate [{}, {}) right by {}",
                    block.offset + block.m,
                    block.offset + n + block.m,
                    block.m
                ),
            );
        }
        cycle_leader_pass(&mut deck[..], block.offset, block.k, &mut NoMeter)
            .map_err(|e| e.to_string())?;
        out.push(
            &deck,
            format!(
                "cycle leaders on [{}, {}): 3^{} - 1 = {} cards",
                block.offset,
                block.end(),
                block.k,
                block.size()
            ),
        );
    }
    Ok(out)
}

/// Text listing of the cycles of `kind` (`in`, `out`, `k:<k>`) on `order` cards.
pub fn cycle_report(kind: &str, order: usize) -> Result<String, String> {
    let kind: ShuffleKind = kind.parse()?;
    let mut out = Vec::new();
    cmd_cycles(order, kind, &mut out).map_err(|e| e.to_string())?;
    String::from_utf8(out).map_err(|e| e.to_string())
}

/// `[len, moves / len, ...]` for every even length from 2 to `max_len`
/// in steps of `step`.
pub fn moves_curve(max_len: usize, step: usize) -> Vec<f64> {
    let step = step.max(2) & !1;
    let mut points = Vec::new();
    let mut buf: Vec<u32> = Vec::with_capacity(max_len);
    for len in (2..=max_len).step_by(step) {
        buf.clear();
        buf.extend(0..len as u32);
        let mut meter = Instrumentation::new();
        in_shuffle(&mut buf[..], &mut meter).expect("even length");
        points.push(len as f64);
        points.push(meter.moves as f64 / len as f64);
    }
    points
}

#[wasm_bindgen(js_name = traceInShuffle)]
pub fn trace_in_shuffle(len: usize) -> Result<Trace, JsError> {
    trace(len).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = cycleReport)]
pub fn cycle_report_js(kind: &str, order: usize) -> Result<String, JsError> {
    cycle_report(kind, order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = movesCurve)]
pub fn moves_curve_js(max_len: usize, step: usize) -> Vec<f64> {
    moves_curve(max_len.min(1 << 20), step)
}
