use lapimm::combinat::{enumerate_partitions, inverse_frobenius, Basis};
use lapimm::graph::{canonical_form, parse_edge_list, write_edge_list};
use lapimm::imm::{imm_polynomial, PermutationCensus};
use lapimm::orient::{coefficient_via_orientations_in, count_b_types_all};
use lapimm::poset::{build_poset, FamilySpec};
use lapimm::shift::{enumerate_ggs_moves, ggs, GgsMove};
use num_bigint::BigInt;

const PENDANT_CYCLE: &str = "# 4-cycle with a pendant path\n6 6\n1 2\n2 3\n3 4\n4 1\n1 5\n5 6\n";

#[test]
fn edge_list_round_trip_and_polynomials() {
    let g = parse_edge_list(PENDANT_CYCLE).unwrap();
    assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);

    let census = PermutationCensus::new(&g.laplacian());
    for basis in Basis::ALL {
        for lam in enumerate_partitions(6) {
            let f = inverse_frobenius(basis, &lam);
            let poly = census.polynomial(&f).unwrap();
            assert_eq!(poly, imm_polynomial(&g.laplacian(), &f).unwrap());
            for r in [0, 3, 6] {
                let via = coefficient_via_orientations_in(&g, basis, &lam, r).unwrap();
                assert_eq!(poly.coefficient(r), &via, "{basis}_{lam} r={r}");
            }
        }
    }
    // b_1 of the sign polynomial is twice the edge count
    let sign = census
        .polynomial(&inverse_frobenius(Basis::Schur, &"1^6".parse().unwrap()))
        .unwrap();
    assert_eq!(sign.coefficient(1), &BigInt::from(12));
    assert_eq!(sign.evaluate(&BigInt::from(0)), BigInt::from(0));
}

#[test]
fn moves_lead_through_the_poset() {
    let h = build_poset(FamilySpec::Unicyclic { n: 7, k: 4 }).unwrap();
    assert_eq!(h.len(), 4);
    let (maximal, minimal) = h.extremal_elements();
    assert_eq!((maximal.len(), minimal.len()), (1, 1));
    let bottom = &h.nodes[minimal[0]].graph;
    // every move out of the bottom lands on a node above it
    let above = h.up_set(minimal[0]);
    for mv in enumerate_ggs_moves(bottom) {
        let line = mv.to_string();
        assert_eq!(GgsMove::parse(bottom, &line).unwrap(), mv);
        let next = canonical_form(&ggs(bottom, &mv).unwrap()).unwrap();
        let id = h
            .nodes
            .iter()
            .position(|n| n.canonical == next)
            .expect("stays in the family");
        assert!(above[id] && id != minimal[0]);
    }
    let dot = h.to_dot();
    assert_eq!(dot.matches(" -> ").count(), h.covers.len());
}

#[test]
fn censuses_shrink_along_a_shift() {
    let g = parse_edge_list(PENDANT_CYCLE).unwrap();
    let moves = enumerate_ggs_moves(&g);
    assert!(!moves.is_empty());
    let before = count_b_types_all(&g).unwrap();
    for mv in moves {
        let after = count_b_types_all(&ggs(&g, &mv).unwrap()).unwrap();
        for (b, a) in before.iter().zip(&after) {
            assert!(a.iter().all(|(ty, count)| count <= b.get(ty)), "move {mv}");
            assert!(a.total() <= b.total());
        }
    }
}
