#![allow(dead_code)]

use std::path::PathBuf;

use skc_core::Schedule;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

pub fn load(name: &str) -> Schedule {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    Schedule::parse(&text).unwrap()
}

pub fn seeding_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.replace('-', ""))
        .collect()
}

pub const GALOIS8: [&str; 7] = [
    "0145-2367",
    "0426-5173",
    "0563-7214",
    "0257-6431",
    "0312-4756",
    "0671-3542",
    "0734-1625",
];
