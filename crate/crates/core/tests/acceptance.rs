//! Exit criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test -p inshuffle --test acceptance -- --nocapture --test-threads=1`
//! to see them in order.

use std::fs;
use std::process::Command;
use std::time::Instant;

use inshuffle::numtheory::{euler_totient, is_primitive_root};
use inshuffle::oracle::oracle_shuffle;
use inshuffle::{
    cycle_decomposition, in_shuffle, k_shuffle, out_shuffle, un_shuffle, Instrumentation, NoMeter,
    ShuffleKind,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sha2::{Digest, Sha256};

fn report(id: &str, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("[PASS] {id} {what}");
    } else {
        println!("[FAIL] {id} {what}: {}", failures.join("; "));
    }
    assert!(failures.is_empty(), "{id} failed: {failures:?}");
}

fn measure(len: usize) -> Instrumentation {
    let mut v: Vec<u64> = (0..len as u64).collect();
    let mut m = Instrumentation::new();
    in_shuffle(&mut v[..], &mut m).unwrap();
    m
}

#[test]
fn c1_oracle_equivalence_exhaustive() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for len in (2..=4096usize).step_by(2) {
        let payload: Vec<u32> = (0..len as u32).collect();
        let mut v = payload.clone();
        in_shuffle(&mut v[..], &mut NoMeter).unwrap();
        if v != oracle_shuffle(&payload, ShuffleKind::InShuffle).unwrap() {
            failures.push(format!("len {len}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        failures.push(format!("took {secs:.1}s"));
    }
    report(
        "C1",
        "in_shuffle == oracle for every even length 2..=4096",
        &failures,
    );
}

#[test]
fn c2_oracle_equivalence_random_large() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let mut failures = Vec::new();
    for _ in 0..50 {
        let len = rng.gen_range(1..=(1usize << 19)) * 2;
        let payload: Vec<u64> = (0..len).map(|_| rng.gen()).collect();
        let mut v = payload.clone();
        in_shuffle(&mut v[..], &mut NoMeter).unwrap();
        if v != oracle_shuffle(&payload, ShuffleKind::InShuffle).unwrap() {
            failures.push(format!("len {len}"));
        }
    }
    report(
        "C2",
        "in_shuffle == oracle for 50 random lengths <= 2^20",
        &failures,
    );
}

#[test]
fn c3_cycle_structure_of_powers_of_three() {
    let mut failures = Vec::new();
    for k in 1..=8u32 {
        let modulus = 3u64.pow(k);
        let d = cycle_decomposition(ShuffleKind::InShuffle, modulus as usize - 1).unwrap();
        let phi = euler_totient(modulus).unwrap();
        let got: Vec<(usize, usize)> = d.cycles.iter().map(|c| (c[0], c.len())).collect();
        let want: Vec<(usize, usize)> = (0..k)
            .map(|s| (3usize.pow(s), (phi / 3u64.pow(s)) as usize))
            .collect();
        if got != want {
            failures.push(format!("k {k}: {got:?}"));
        }
    }
    report(
        "C3",
        "3^k-1 in-shuffle has k cycles, leaders 3^s, lengths phi(3^k)/3^s",
        &failures,
    );
}

#[test]
fn c4_two_is_primitive_root_of_powers_of_three() {
    let failures: Vec<String> = (1..=12u32)
        .filter(|&k| !is_primitive_root(2, 3u64.pow(k)).unwrap())
        .map(|k| format!("k {k}"))
        .collect();
    report(
        "C4",
        "2 is a primitive root of 3^k for k = 1..=12",
        &failures,
    );
}

const LINEARITY_LENS: [usize; 10] = [8, 26, 80, 242, 728, 2186, 6560, 1 << 16, 1 << 20, 1 << 22];

#[test]
fn c5_moves_per_element_and_wall_clock() {
    let mut failures = Vec::new();
    for len in LINEARITY_LENS {
        let per = measure(len).moves as f64 / len as f64;
        if !(1.0..=6.0).contains(&per) {
            failures.push(format!("moves/len = {per:.3} at {len}"));
        }
    }
    let mut v: Vec<u64> = (0..1u64 << 22).collect();
    let start = Instant::now();
    in_shuffle(&mut v[..], &mut Instrumentation::new()).unwrap();
    let secs = start.elapsed().as_secs_f64();
    if secs >= 1.0 {
        failures.push(format!("2^22 took {secs:.3}s"));
    }
    report(
        "C5a",
        "moves/len in [1, 6]; 2^22 elements in < 1 s",
        &failures,
    );
}

#[test]
fn c5_moves_growth_under_doubling() {
    let mut failures = Vec::new();
    for len in LINEARITY_LENS {
        let ratio = measure(2 * len).moves as f64 / measure(len).moves as f64;
        if ratio > 2.4 {
            failures.push(format!("moves(2*{len})/moves({len}) = {ratio:.3}"));
        }
    }
    report("C5b", "moves(2 len)/moves(len) <= 2.4", &failures);
}

#[test]
fn c6_constant_auxiliary_space() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut lens: Vec<usize> = (2..=4096).step_by(2).collect();
    lens.extend((1..=22).map(|e| 1usize << e));
    lens.extend(
        (1..=13)
            .map(|k| 3usize.pow(k) - 1)
            .filter(|&l| l <= 1 << 22),
    );
    lens.extend((0..40).map(|_| rng.gen_range(1..=(1usize << 21)) * 2));
    let mut failures = Vec::new();
    let mut peak = 0;
    for len in lens {
        let m = measure(len);
        peak = peak.max(m.aux_words_peak);
        if m.aux_words_peak > 64 {
            failures.push(format!("{} words at {len}", m.aux_words_peak));
        }
    }
    println!("      peak auxiliary words over all lengths: {peak}");
    report(
        "C6",
        "aux_words_peak <= 64 for all lengths up to 2^22",
        &failures,
    );
}

#[test]
fn c7_inverse_and_order_laws() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut failures = Vec::new();
    for _ in 0..200 {
        let len = rng.gen_range(0..=(1usize << 15)) * 2;
        let payload: Vec<u64> = (0..len).map(|_| rng.gen()).collect();
        let mut v = payload.clone();
        in_shuffle(&mut v[..], &mut NoMeter).unwrap();
        un_shuffle(&mut v[..], &mut NoMeter).unwrap();
        let forward_ok = v == payload;
        un_shuffle(&mut v[..], &mut NoMeter).unwrap();
        in_shuffle(&mut v[..], &mut NoMeter).unwrap();
        if !forward_ok || v != payload {
            failures.push(format!("inverse at len {len}"));
        }
    }
    let deck: Vec<u32> = (1..=52).collect();
    let mut v = deck.clone();
    for _ in 0..52 {
        in_shuffle(&mut v[..], &mut NoMeter).unwrap();
    }
    if v != deck {
        failures.push("52 in-shuffles".into());
    }
    for _ in 0..8 {
        out_shuffle(&mut v[..], &mut NoMeter).unwrap();
    }
    if v != deck {
        failures.push("8 out-shuffles".into());
    }
    report(
        "C7",
        "un_shuffle inverts in_shuffle; in^52 = out^8 = id on 52 cards",
        &failures,
    );
}

#[test]
fn c8_k_way_extension() {
    let mut failures = Vec::new();
    for k in 2..=5usize {
        for len in (k..=3000).step_by(k) {
            let payload: Vec<u32> = (0..len as u32).collect();
            let mut v = payload.clone();
            k_shuffle(&mut v[..], k, &mut NoMeter).unwrap();
            if v != oracle_shuffle(&payload, ShuffleKind::KWay(k)).unwrap() {
                failures.push(format!("k {k} len {len}"));
            }
            if k == 2 {
                let mut w = payload.clone();
                in_shuffle(&mut w[..], &mut NoMeter).unwrap();
                if v != w {
                    failures.push(format!("k 2 differs from in_shuffle at len {len}"));
                }
            }
        }
    }
    report(
        "C8",
        "k_shuffle == oracle for k in 2..=5, lengths <= 3000",
        &failures,
    );
}

fn apply(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_inshuffle"))
        .arg("apply")
        .args(args)
        .status()
        .expect("binary runs")
        .code()
}

#[test]
fn c9_cli_round_trip_and_verify() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    let dir = tempfile::tempdir().unwrap();
    let mut failures = Vec::new();

    let big = dir.path().join("big.bin");
    let mut bytes = vec![0u8; 10 << 20];
    rng.fill(&mut bytes[..]);
    fs::write(&big, &bytes).unwrap();
    let before = Sha256::digest(&bytes);
    let p = big.to_str().unwrap();
    if apply(&["--kind", "in", "--record-size", "64", p]) != Some(0)
        || Sha256::digest(fs::read(&big).unwrap()) == before
        || apply(&["--kind", "in", "--inverse", "--record-size", "64", p]) != Some(0)
    {
        failures.push("10 MB apply failed".into());
    }
    if Sha256::digest(fs::read(&big).unwrap()) != before {
        failures.push("10 MB round trip changed the file".into());
    }

    let kinds = ["in", "out", "k:3", "k:4", "k:5"];
    let mut mismatches = 0;
    for i in 0..1000 {
        let kind = kinds[i % kinds.len()];
        let parts = match kind {
            "in" | "out" => 2,
            k => k[2..].parse().unwrap(),
        };
        let record_size = rng.gen_range(1..=32usize);
        let count = parts * rng.gen_range(1..=40usize);
        let mut data = vec![0u8; count * record_size];
        rng.fill(&mut data[..]);
        let path = dir.path().join(format!("small{i}.bin"));
        fs::write(&path, &data).unwrap();
        let inverse = rng.gen_bool(0.5);
        let size = record_size.to_string();
        let mut args = vec!["--kind", kind, "--verify", "--record-size", &size];
        if inverse {
            args.push("--inverse");
        }
        args.push(path.to_str().unwrap());
        if apply(&args) != Some(0) {
            mismatches += 1;
        }
    }
    if mismatches > 0 {
        failures.push(format!("{mismatches} verify failures"));
    }
    report(
        "C9",
        "CLI 10 MB round trip is hash-identical; 1000 verified applies",
        &failures,
    );
}
