"""Smoke tests for the scramblenum extension module."""

import scramblenum as sn


def test_families_and_invariants():
    w5 = sn.family("W5")
    assert w5.n == 6
    assert sn.edge_connectivity(w5) == 3
    assert sn.lambda2(w5) == 4
    assert sn.independence_number(w5) == 2
    assert sn.uniform_scramble_2_order(w5) == 4
    assert sn.sn(w5) == 4
    assert sn.dsn(w5) == 3


def test_four_minimal_graphs():
    for name in ("K4", "P33", "C3221", "LL6"):
        g = sn.family(name)
        assert sn.sn(g) == 3
        w, decomp = sn.screewidth(g)
        assert w == 3
        assert sn.classify(g).startswith("sn>=3")


def test_classify_and_minor():
    tree = sn.Multigraph(4, [(0, 1, 1), (1, 2, 1), (1, 3, 1)])
    assert sn.classify(tree) == "sn=1"
    c5 = sn.family("C", n=5, k=1)
    assert sn.classify(c5) == "sn=2"
    emb = sn.is_topological_minor(sn.family("K4"), sn.family("W5"))
    assert emb is not None and len(emb["branch_map"]) == 4
    assert sn.is_topological_minor(sn.family("C3221"), sn.family("LL6")) is None
    assert sn.is_multi_topological_minor(sn.family("C", n=8, k=2), sn.family("C", n=9, k=2))


def test_scramble_order():
    ll6 = sn.family("LL6")
    o = sn.scramble_order(ll6, [[1, 2], [3, 4], [5, 0]])
    assert o["hitting"] == 3 and o["egg_cut"] == 3 and o["order"] == 3


def test_minimality_and_certificate():
    assert sn.is_k_scramble_minimal(sn.family("C", n=4, k=2), 4)
    cert = sn.sn_certificate(sn.family("Ctilde", n=6, k=2))
    assert cert["sn"] == 5
    assert cert["upper_witness_type"] in ("tree_cut_decomposition", "exhausted_search")


def test_enumeration():
    graphs = sn.enumerate_connected_multigraphs(3, 2)
    assert len(graphs) == 10
    ok, checked = sn.verify_corollary_3ec(3, 3)
    assert ok and checked >= 2


def main():
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"ok {name}")
    print("python smoke tests passed")


if __name__ == "__main__":
    main()
