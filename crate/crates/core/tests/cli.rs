use clique_bounds::cli::{run, EXIT_DOMAIN, EXIT_INAPPLICABLE, EXIT_OK, SCHEMA};
use clique_bounds::graphs::io::{from_edge_list, from_graph6};
use clique_bounds::graphs::{clique_count, Graph};
use clique_bounds::oracle::CSV_HEADER;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cliquebounds").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = call(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn bound_envelope() {
    let (code, v) = json(&["bound", "--m", "102", "--k", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["schema"], SCHEMA);
    assert_eq!(v["command"], "bound");
    let p = &v["payload"];
    assert_eq!((&p["oldbd"], &p["lgbd"], &p["smbd"], &p["main"]), (&"149".into(), &"147".into(), &"146".into(), &"147".into()));
    assert_eq!(p["winner"], "LGBD");
    let (_, v) = json(&["bound", "--m", "70", "--k", "3", "--step", "2"]);
    assert_eq!(v["payload"]["nonconsec"]["value"], "61");
}

#[test]
fn big_inputs_stay_exact() {
    let m = "1000000000000000000000000000000";
    let (code, v) = json(&["repr", "--m", m, "--k", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["payload"]["cascade"]["value"], m);
}

#[test]
fn construct_emits_a_matching_graph() {
    let (code, v) = json(&["construct", "--m", "102", "--k", "3", "--which", "2"]);
    assert_eq!(code, EXIT_OK);
    let g = from_graph6(v["payload"]["graph"].as_str().unwrap()).unwrap();
    assert_eq!((clique_count(&g, 3), clique_count(&g, 4)), (102, 147));
    let (_, v) = json(&["construct", "--m", "85", "--k", "4", "--which", "1", "--graph-format", "edgelist"]);
    let g = from_edge_list(v["payload"]["graph"].as_str().unwrap()).unwrap();
    assert_eq!((clique_count(&g, 4), clique_count(&g, 5)), (85, 62));
}

#[test]
fn error_exit_codes() {
    let (code, v) = json(&["construct", "--m", "35", "--k", "3", "--which", "3"]);
    assert_eq!(code, EXIT_INAPPLICABLE);
    assert_eq!(v["error"]["kind"], "inapplicable");
    let (code, v) = json(&["repr", "--m", "0", "--k", "3"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(v["error"]["kind"], "domain");
    let (code, _, err) = call(&["bound", "--m", "abc", "--k", "3"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(!err.is_empty());
    let (code, v) = json(&["verify", "--k", "3", "--n-max", "8"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(v["error"]["kind"], "resource_limit");
}

#[test]
fn cliques_from_file() {
    let dir = std::env::temp_dir().join(format!("cliquebounds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    std::fs::write(&path, "DQc\nF~~~w\n").unwrap();
    let (code, v) = json(&["cliques", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let graphs = v["payload"]["graphs"].as_array().unwrap();
    assert_eq!(graphs[1]["clique_vector"]["counts"][3], "35");
    let list = dir.join("g.txt");
    std::fs::write(&list, clique_bounds::graphs::io::to_edge_list(&Graph::complete(4))).unwrap();
    let (_, v) = json(&["cliques", list.to_str().unwrap(), "--format", "edgelist"]);
    assert_eq!(v["payload"]["graphs"][0]["clique_vector"]["counts"][4], "1");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn revlex_text_and_json() {
    let (code, out, _) = call(&["revlex", "--k", "2", "--m", "4", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1 2\n1 3\n2 3\n1 4\n");
    let (_, v) = json(&["revlex", "--k", "3", "--m", "70", "--r", "7"]);
    assert_eq!(v["payload"]["face_vector"][3], "70");
}

#[test]
fn board_modes() {
    let (code, v) = json(&["board", "--k", "3", "--top", "4,3", "--bottom", "4,2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["payload"]["final_state"]["top"][0], "5");
    let (code, out, _) = call(&["board", "--k", "2", "--top", "3", "--bottom", "2", "--single", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("T4"));
    let (code, _) = json(&["board", "--k", "2", "--top", "3", "--bottom", "2"]);
    assert_eq!(code, EXIT_DOMAIN);
}

#[test]
fn verify_csv_and_json() {
    let (code, out, _) = call(&["verify", "--k", "3", "--n-max", "5", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some(CSV_HEADER));
    let (code, v) = json(&["verify", "--k", "2,3", "--n-max", "6", "--prune"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["payload"]["reports"][1]["main_violations"], "0");
}

#[test]
fn stats_commands() {
    let (code, v) = json(&["stats", "fj", "--k", "3", "--j", "1000"]);
    assert_eq!(code, EXIT_OK);
    let f = &v["payload"]["fj"][0]["fraction"];
    assert_eq!((&f["num"], &f["den"]), (&"108".into(), &"125".into()));
    let (_, v) = json(&["stats", "ratio", "--m", "102", "--k", "3"]);
    assert_eq!(v["payload"]["lgbd"], "147");
}

#[test]
fn outputs_reproduce_library_values() {
    use clique_bounds::bounds::main_bound;
    use clique_bounds::representations::kk_rep;
    use clique_bounds::Nat;
    for k in 2..=5u64 {
        for m in [1u64, 2, 7, 35, 70, 85, 102, 999, 12_345, 1 << 40] {
            let ms = m.to_string();
            let ks = k.to_string();
            let (_, v) = json(&["bound", "--m", &ms, "--k", &ks]);
            let lib = main_bound(&Nat::from(m), k).unwrap();
            let p = &v["payload"];
            assert_eq!(p["oldbd"], lib.oldbd.to_string());
            assert_eq!(p["lgbd"], lib.lgbd.to_string());
            assert_eq!(p["main"], lib.main.to_string());
            match &lib.smbd {
                Some(s) => assert_eq!(p["smbd"], s.to_string()),
                None => assert!(p["smbd"].is_null()),
            }
            let (_, v) = json(&["repr", "--m", &ms, "--k", &ks]);
            let terms: Vec<u64> = v["payload"]["cascade"]["terms"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| t.as_str().unwrap().parse().unwrap())
                .collect();
            assert_eq!(terms, kk_rep(&Nat::from(m), k).unwrap().terms);
        }
    }
}
