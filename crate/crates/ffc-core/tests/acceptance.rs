//! End-to-end acceptance checks, one test per criterion:
//!
//! 1. the eight known codewords for 1..=8, bit for bit;
//! 2. the byte-table records for segments 173 (MAP1) and 165 (MAP2);
//! 3. the three-segment stream (173, 165, 6) decoding to (4, 7, 86);
//! 4. shift_left_value against its brute-force oracle over 310,000 cases;
//! 5. fast = naive = input over 10^4 seeded random sequences;
//! 6. exhaustive bit-accounting and flag audit of all byte-table records;
//! 7. fast decoder at least 2x the naive decoder on all ten benchmark
//!    collections at full 2^22 length;
//! 8. fast decoder at least 1.5x per value across a geometric value sweep.
//!
//! Timing-sensitive tests serialize on a shared lock so parallel test
//! threads cannot distort the medians.

use std::sync::{Mutex, OnceLock};

use ffc_core::bench::{per_value_profile, run_benchmark, BenchReport};
use ffc_core::collections::{generate, Kind, Preset, DEFAULT_LENGTH, DEFAULT_SEED};
use ffc_core::fast::{build_record, decode_fast, MappingTables};
use ffc_core::fib;
use ffc_core::naive::{decode_naive, encode_stream};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tables() -> &'static MappingTables {
    static TABLES: OnceLock<MappingTables> = OnceLock::new();
    TABLES.get_or_init(|| MappingTables::build(8).unwrap())
}

fn timing_lock() -> std::sync::MutexGuard<'static, ()> {
    static LOCK: Mutex<()> = Mutex::new(());
    LOCK.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

#[test]
fn c1_small_codewords_bit_for_bit() {
    let expected = [
        (1u64, "11"),
        (2, "011"),
        (3, "0011"),
        (4, "1011"),
        (5, "00011"),
        (6, "10011"),
        (7, "01011"),
        (8, "000011"),
    ];
    for (n, code) in expected {
        assert_eq!(
            fib::encode_number(n).unwrap().to_string(),
            code,
            "codeword for {n}"
        );
    }
    println!("criterion 1: all eight small codewords exact");
}

#[test]
fn c2_worked_example_records() {
    let tables = tables();

    let map1_173 = tables.map1(173).unwrap();
    assert_eq!(map1_173.count(), 2);
    assert_eq!(map1_173.numbers(), &[4, 7]);
    assert_eq!(map1_173.shift(), 4);
    assert!(!map1_173.end_with_zero());
    assert!(!map1_173.start_with_zero());
    assert_eq!(map1_173.to_string(), "{2,(4,7),4,False,False}");

    let map2_165 = tables.map2(165).unwrap();
    assert_eq!(map2_165.count(), 1);
    assert_eq!(map2_165.numbers(), &[31]);
    assert_eq!(map2_165.shift(), 7);
    assert!(!map2_165.end_with_zero());
    assert!(!map2_165.start_with_zero());
    assert_eq!(map2_165.to_string(), "{1,(31),7,False,False}");

    println!("criterion 2: MAP1[173] and MAP2[165] exact");
}

#[test]
fn c3_worked_example_stream() {
    let got = decode_fast(&[173, 165, 6], 3, tables()).unwrap();
    assert_eq!(got, vec![4, 7, 86]);
    // 86 = 31 + 55: the pending value from segment 165 plus the spliced
    // fragment value(F(2) << 7) = 55.
    assert_eq!(fib::shift_left_value(2, 1, 7).unwrap(), 55);
    // Independent confirmation by the bit-by-bit decoder.
    assert_eq!(decode_naive(&[173, 165, 6], 19, 3).unwrap(), vec![4, 7, 86]);
    println!("criterion 3: segments (173,165,6) decode to (4,7,86)");
}

#[test]
fn c4_shift_identity_310k_cases() {
    for n in 1..=10_000u64 {
        let first = fib::shift_right_value(n, 1).unwrap();
        for k in 0..=30usize {
            assert_eq!(
                fib::shift_left_value(n, first, k).unwrap(),
                fib::shift_left_value_brute(n, k).unwrap(),
                "n = {n}, k = {k}"
            );
        }
    }
    println!("criterion 4: 310,000 shift identities hold");
}

#[test]
fn c5_oracle_equivalence_10k_sequences() {
    let _serial = timing_lock();
    let tables = tables();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE5);
    for case in 0..10_000u32 {
        let len = rng.gen_range(0..=1000);
        let numbers: Vec<u64> = (0..len)
            .map(|_| rng.gen_range(1..=4_294_967_295u64))
            .collect();
        let stream = encode_stream(&numbers).unwrap();
        let fast = decode_fast(&stream.bytes, stream.count, tables).unwrap();
        let naive = decode_naive(&stream.bytes, stream.bit_len, stream.count).unwrap();
        assert_eq!(fast, naive, "case {case}");
        assert_eq!(fast, numbers, "case {case}");
    }
    println!("criterion 5: 10,000 random sequences round-trip through both decoders");
}

#[test]
fn c6_exhaustive_record_audit() {
    let tables = tables();
    // Value-bit length of a complete codeword, recomputed independently.
    let code_bits = |n: u64| fib::table().largest_index_at_most(n);

    let audit = |record: &ffc_core::fast::MapRecord, decoded_bits: u8, index: usize| {
        let numbers = record.numbers();
        assert_eq!(numbers.len(), record.count() as usize, "index {index}");
        assert!(
            u32::from(record.count()) <= u32::from(decoded_bits).div_ceil(2),
            "count exceeds ceil(S/2) at index {index}"
        );
        // Every decoded bit position must be accounted for: value bits plus
        // terminator for complete numbers, `shift` bits for the partial.
        let complete = if record.shift() == 0 {
            numbers
        } else {
            &numbers[..numbers.len() - 1]
        };
        let mut bits_used: u64 = complete.iter().map(|&n| code_bits(n) as u64 + 1).sum();
        bits_used += u64::from(record.shift());
        assert_eq!(bits_used, u64::from(decoded_bits), "index {index}");
        // first_shifted is the precomputed offset-1 valuation of the first
        // number.
        let expected_first = match numbers.first() {
            Some(&n) if n > 0 => fib::shift_right_value(n, 1).unwrap(),
            _ => 0,
        };
        assert_eq!(record.first_shifted(), expected_first, "index {index}");
    };

    for index in 0..256usize {
        let record = tables.map1(index).unwrap();
        audit(record, 8, index);
        assert_eq!(record.start_with_zero(), index % 2 == 0, "index {index}");
        assert_eq!(record.end_with_zero(), index >> 7 & 1 == 0, "index {index}");
        // The table is a memoization of the bit-by-bit decoder.
        let bits: Vec<bool> = (0..8).map(|j| index >> j & 1 == 1).collect();
        assert_eq!(record, &build_record(&bits), "index {index}");
    }
    for index in (1..256usize).step_by(2) {
        let record = tables.map2(index).unwrap();
        audit(record, 7, index);
        assert!(!record.start_with_zero(), "index {index}");
        assert_eq!(record.end_with_zero(), index >> 7 & 1 == 0, "index {index}");
        // Same decode as the truncated pattern, start flag aside.
        let bits: Vec<bool> = (1..8).map(|j| index >> j & 1 == 1).collect();
        let reference = build_record(&bits);
        assert_eq!(record.numbers(), reference.numbers(), "index {index}");
        assert_eq!(record.shift(), reference.shift(), "index {index}");
    }
    println!("criterion 6: all 256 MAP1 and 128 odd MAP2 records audited");
}

#[test]
fn c7_speedup_on_all_ten_collections() {
    let _serial = timing_lock();
    let tables = tables();
    const REPEATS: u32 = 3;
    const MIN_SPEEDUP: f64 = 2.0;
    // Reference averages for the same collections: 3.73x sequential,
    // 3.52x random.
    const REFERENCE_AVG: [(Kind, f64); 2] = [(Kind::Seq, 3.73), (Kind::Rand, 3.52)];

    let mut report = BenchReport::new(REPEATS);
    let mut failures = Vec::new();
    for preset in Preset::ALL {
        let numbers = generate(&preset.spec(DEFAULT_LENGTH, DEFAULT_SEED)).unwrap();
        let row = run_benchmark(preset.name(), &numbers, REPEATS, tables).unwrap();
        if row.speedup() < MIN_SPEEDUP {
            failures.push(format!("{}: {:.2}x", preset.name(), row.speedup()));
        }
        report.rows.push(row);
    }
    println!("{}", report.text_table());
    for (kind, reference) in REFERENCE_AVG {
        let (naive, fast): (f64, f64) = Preset::ALL
            .iter()
            .zip(&report.rows)
            .filter(|(p, _)| p.kind() == kind)
            .map(|(_, r)| (r.naive_ms, r.fast_ms))
            .fold((0.0, 0.0), |acc, v| (acc.0 + v.0, acc.1 + v.1));
        let label = match kind {
            Kind::Seq => "sequential",
            Kind::Rand => "random",
        };
        println!(
            "criterion 7: {label} collections measured avg {:.2}x (reference {reference}x)",
            naive / fast
        );
    }
    assert!(
        failures.is_empty(),
        "collections below {MIN_SPEEDUP}x: {failures:?}"
    );
}

#[test]
fn c8_per_value_speedup_sweep() {
    let _serial = timing_lock();
    let tables = tables();
    const COPIES: usize = 100_000;
    const REPEATS: u32 = 3;
    const MIN_SPEEDUP: f64 = 1.5;

    let mut values: Vec<u64> = (0..32).map(|e| 1u64 << e).collect();
    values.push(4_294_967_295);
    let rows = per_value_profile(&values, COPIES, REPEATS, tables).unwrap();
    let mut failures = Vec::new();
    for row in &rows {
        println!(
            "criterion 8: value {:>10}  naive {:>8.2} ms  fast {:>7.2} ms  {:.2}x",
            row.label,
            row.naive_ms,
            row.fast_ms,
            row.speedup()
        );
        if row.speedup() < MIN_SPEEDUP {
            failures.push(format!("{}: {:.2}x", row.label, row.speedup()));
        }
    }
    assert!(
        failures.is_empty(),
        "values below {MIN_SPEEDUP}x: {failures:?}"
    );
}
