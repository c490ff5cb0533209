//! Replays the checked-in fuzz corpus and byte mutations of each seed.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zipfold_core::fuzzing;
use zipfold_core::polygon::{polygon_to_json, sample_fat_hexagon};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut files: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(!files.is_empty(), "no seeds in {}", dir.display());
    files.iter().map(|p| fs::read(p).unwrap()).collect()
}

fn mutate(rng: &mut ChaCha8Rng, seed: &[u8]) -> Vec<u8> {
    let mut out = seed.to_vec();
    for _ in 0..rng.random_range(1..4) {
        if out.is_empty() {
            out.push(rng.random());
            continue;
        }
        let i = rng.random_range(0..out.len());
        match rng.random_range(0..3) {
            0 => out[i] = rng.random(),
            1 => {
                out.remove(i);
            }
            _ => out.insert(i, b"0123456789.-e,[]{}"[rng.random_range(0..18)]),
        }
    }
    out
}

fn exercise(target: &str, f: fn(&[u8])) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for s in seeds(target) {
        f(&s);
        for _ in 0..20_000 {
            f(&mutate(&mut rng, &s));
        }
    }
}

#[test]
fn polygon_json_corpus() {
    exercise("polygon_json", fuzzing::polygon_json);
    fuzzing::polygon_json(polygon_to_json(&sample_fat_hexagon(0).unwrap()).as_bytes());
}

#[test]
fn gluing_report_corpus() {
    exercise("gluing_report", fuzzing::gluing_report);
}

#[test]
fn polygon_validate_corpus() {
    exercise("polygon_validate", fuzzing::polygon_validate);
}
