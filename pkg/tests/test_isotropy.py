from equistrat.isotropy import (lattice_table, lattice_to_dot,
                                lattice_with_normalizers, strata_dimension)


def node_map(lat):
    return {n.name: n for n in lat.nodes}


def test_d2_lattice(lattice):
    lat = lattice("d2")
    nodes = node_map(lat)
    assert len(lat.nodes) == 4
    assert sorted(n.index_s for n in lat.nodes) == [0, 0, 1, 1]
    assert nodes["Z2(sigma)"].index_s == 1
    assert nodes["Z2(kappa)"].index_s == 0
    assert nodes["Z2(sigma)"].is_maximal and nodes["Z2(kappa)"].is_maximal
    assert not nodes["1"].is_maximal


def test_d6_lattice(lattice):
    lat = lattice("d6")
    assert len(lat.nodes) == 4
    assert sorted(n.index_s for n in lat.nodes) == [0, 1, 1, 2]
    nodes = node_map(lat)
    assert nodes["Z2(s)"].index_s == 1 and nodes["Z2(rs)"].index_s == 1
    assert nodes["1"].index_s == 2
    maximal = {n.name for n in lat.maximal_nodes()}
    assert maximal == {"Z2(s)", "Z2(rs)"}


def test_fgroup_lattice(lattice):
    lat = lattice("f134_case1")
    assert len(lat.nodes) == 6
    nodes = node_map(lat)
    assert nodes["Z4(b1)"].index_s == 1
    assert nodes["Z4(b1c2)"].index_s == 1
    assert nodes["Z2(b1^2)"].index_s == 2
    assert nodes["Z2(b1^2c2)"].index_s == 2
    # fixed-point dimensions in the one-block target W = V2
    assert nodes["Z4(b1)"].dim_fix_w == 1
    assert nodes["Z4(b1c2)"].dim_fix_w == 1
    assert nodes["Z2(b1^2)"].dim_fix_w == 2
    assert nodes["Z2(b1^2c2)"].dim_fix_w == 2
    maximal = {n.name for n in lat.maximal_nodes()}
    assert maximal == {"Z4(b1)", "Z4(b1c2)", "Z2(b1^2c2)"}


def test_z2rev_lattice(lattice):
    lat = lattice("z2rev")
    nodes = node_map(lat)
    assert nodes["z2rev"].index_s == 1  # the full group node
    assert nodes["1"].index_s == 0


def test_order_edges_cover(lattice):
    lat = lattice("d6")
    # every non-top node reaches the top through covering edges
    tops = [i for i, n in enumerate(lat.nodes)
            if n.subgroup.order == lat.group.order]
    uppers = {i for i, _ in lat.order_edges}
    for i, n in enumerate(lat.nodes):
        if i not in tops:
            assert i in uppers


def test_strata_dimension(lattice):
    n = node_map(lattice("d6"))["Z2(s)"]
    assert strata_dimension(n, 3) == (4, 1)


def test_dot_and_table_output(lattice):
    lat = lattice("d6")
    dot = lattice_to_dot(lat)
    assert dot.startswith("digraph")
    assert '"Z2(s) (1)"' in dot
    table = lattice_table(lat)
    assert "Z2(rs)" in table
    for name, order in lattice_with_normalizers(lat):
        assert order >= 1
