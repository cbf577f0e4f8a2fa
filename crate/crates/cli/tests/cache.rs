use std::collections::BTreeMap;
use std::fs;

use cherlink_cli::cache::{record_hash, Cache, CacheRecord, Family, SCHEMA_VERSION};
use cherlink_core::symfunc::lr_product;
use cherlink_core::Partition;
use serde_json::{json, Value};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn lr(cache: &mut Cache, mu: &str, nu: &str) -> BTreeMap<Partition, u64> {
    cache
        .get_or_compute(Family::Lr, &format!("{mu}|{nu}"), || Ok::<_, ()>(lr_product(&part(mu), &part(nu))))
        .unwrap()
}

#[test]
fn store_then_load_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    let first = {
        let mut c = Cache::open(&path);
        let t = lr(&mut c, "2", "1,1");
        assert_eq!(c.stats(), (0, 1));
        t
    };
    let want: BTreeMap<Partition, u64> = [(part("3,1"), 1), (part("2,1,1"), 1)].into_iter().collect();
    assert_eq!(first, want);

    let mut c = Cache::open(&path);
    assert!(c.warnings().is_empty(), "{:?}", c.warnings());
    assert_eq!(c.len(), 1);
    let again = c
        .get_or_compute(Family::Lr, "2|1,1", || -> Result<BTreeMap<Partition, u64>, ()> { panic!("should hit") })
        .unwrap();
    assert_eq!(again, first);
    assert_eq!(c.stats(), (1, 0));

    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next().unwrap(), format!("{{\"cherlink_cache\":{SCHEMA_VERSION}}}"));
}

#[test]
fn version_mismatch_recomputes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    let rec = CacheRecord::new(Family::Lr, "2|1,1".into(), json!({"9": 7}));
    fs::write(&path, format!("{{\"cherlink_cache\":999}}\n{}\n", serde_json::to_string(&rec).unwrap())).unwrap();

    let mut c = Cache::open(&path);
    assert!(c.is_empty());
    assert!(c.warnings().iter().any(|w| w.contains("version")));
    let t = lr(&mut c, "2", "1,1");
    assert_eq!(t.len(), 2);
    assert_eq!(c.stats(), (0, 1));

    // the rewritten file carries the current header and loads cleanly
    let c2 = Cache::open(&path);
    assert!(c2.warnings().is_empty());
    assert_eq!(c2.len(), 1);
}

#[test]
fn hash_mismatch_recomputes_only_that_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    {
        let mut c = Cache::open(&path);
        lr(&mut c, "2", "1,1");
        lr(&mut c, "1", "1");
        lr(&mut c, "2,1", "1");
    }
    let text = fs::read_to_string(&path).unwrap();
    let tampered: Vec<String> = text
        .lines()
        .map(|l| {
            if l.contains("\"1|1\"") {
                let mut v: Value = serde_json::from_str(l).unwrap();
                v["value"] = json!({"2": 5});
                v.to_string()
            } else {
                l.to_string()
            }
        })
        .collect();
    fs::write(&path, tampered.join("\n") + "\n").unwrap();

    let mut c = Cache::open(&path);
    assert_eq!(c.warnings().len(), 1);
    assert_eq!(c.len(), 2);
    let t = lr(&mut c, "1", "1");
    assert_eq!(t, [(part("2"), 1), (part("1,1"), 1)].into_iter().collect());
    lr(&mut c, "2", "1,1");
    lr(&mut c, "2,1", "1");
    assert_eq!(c.stats(), (2, 1));
}

#[test]
fn unreadable_or_garbage_file_is_a_cold_start() {
    let dir = tempfile::tempdir().unwrap();
    // a directory cannot be read as a file
    let mut c = Cache::open(dir.path());
    assert!(c.is_empty());
    assert!(!c.warnings().is_empty());
    let t = lr(&mut c, "1", "1");
    assert_eq!(t.len(), 2);
    assert!(c.warnings().iter().any(|w| w.contains("write failed")));

    let path = dir.path().join("junk");
    fs::write(&path, "not json at all\n{{{\n").unwrap();
    let mut c = Cache::open(&path);
    assert!(c.is_empty());
    lr(&mut c, "1", "1");
    assert_eq!(Cache::open(&path).len(), 1);
}

#[test]
fn record_hash_covers_family_key_and_value() {
    let v = json!({"3,1": 1});
    let h = record_hash(Family::Lr, "2|1", &v);
    assert_ne!(h, record_hash(Family::Ccoeff, "2|1", &v));
    assert_ne!(h, record_hash(Family::Lr, "2|2", &v));
    assert_ne!(h, record_hash(Family::Lr, "2|1", &json!({"3,1": 2})));
    assert!(CacheRecord::new(Family::Kf, "k".into(), v).is_valid());
}
