use clique_bounds::bounds::{oldbd, smbd};
use clique_bounds::graphs::clique_vector;
use clique_bounds::oracle::{
    build_extremal_table, enumerate_graphs, verify_nonexistence, EnumOptions, MaskGraph, CSV_HEADER,
};
use clique_bounds::Nat;

#[test]
fn mask_counts_agree_with_graph_counts() {
    enumerate_graphs(6, EnumOptions::default(), |i, g| {
        if i % 7 != 0 {
            return;
        }
        let cv = clique_vector(&g.to_graph(), None).unwrap();
        let counts = g.clique_counts();
        for k in 0..=6 {
            assert_eq!(counts[k], cv.get(k), "index {i}");
        }
    })
    .unwrap();
}

#[test]
fn kk_bound_never_met_without_the_large_clique() {
    for k in 2..=4 {
        let t = build_extremal_table(k, 7, EnumOptions::default()).unwrap();
        for row in &t.rows {
            let old = oldbd(&Nat::from(row.m), k).unwrap();
            if let Some(w) = row.max_without {
                assert!(old == Nat::from(0u8) || Nat::from(w) < old, "k={k} m={}", row.m);
                assert!(Nat::from(w) <= smbd(&Nat::from(row.m), k).unwrap().unwrap());
            }
            assert!(Nat::from(row.max_all) <= old);
        }
    }
}

#[test]
fn csv_layout() {
    let t = build_extremal_table(3, 5, EnumOptions::default()).unwrap();
    let csv = t.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let r10 = lines.find(|l| l.starts_with("10,")).unwrap();
    assert!(r10.starts_with("10,5,5,"), "{r10}");
    assert_eq!(csv.lines().count(), t.rows.len() + 1);
}

#[test]
fn witnesses_decode() {
    let t = build_extremal_table(3, 6, EnumOptions::default()).unwrap();
    for row in &t.rows {
        let g = clique_bounds::graphs::io::from_graph6(&row.witness_all).unwrap();
        let cv = clique_vector(&g, None).unwrap();
        assert_eq!((cv.get(3), cv.get(4)), (row.m, row.max_all));
    }
}

#[test]
fn nonexistence_queries() {
    let r = verify_nonexistence(3, 2, &Nat::from(70u64), &Nat::from(62u64), 7, EnumOptions::default()).unwrap();
    assert!(r.no_graph());
    let r = verify_nonexistence(3, 1, &Nat::from(35u64), &Nat::from(35u64), 7, EnumOptions::default()).unwrap();
    assert!(!r.no_graph());
    assert_eq!(MaskGraph::from_index(7, (1 << 21) - 1).graph6(), "F~~~w");
}

#[test]
fn caps_refuse_large_runs() {
    let e = build_extremal_table(3, 9, EnumOptions { prune: false, allow_long: true }).unwrap_err();
    assert_eq!(e.kind(), "resource_limit");
    let e = build_extremal_table(3, 8, EnumOptions::default()).unwrap_err();
    assert_eq!(e.kind(), "resource_limit");
}
