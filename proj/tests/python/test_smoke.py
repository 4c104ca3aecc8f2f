"""Smoke tests for the python bindings: the main operations are callable
and agree with the worked values."""

import json

import pytest

import oscover


def test_halfperiod_group():
    w1 = oscover.HalfPeriod(1)
    w2 = oscover.HalfPeriod(2)
    assert (w1 + w2).label == 3
    assert (w1 + w1).is_origin
    assert oscover.torsion_of_fibers([0, 2, 0, 0]).is_origin


def test_intersection_and_genus():
    cover = oscover.PicClass(c=13, fibers=[3, 0, 0, 0], s=[-1, 0, 0, 0], r=[0, -5, -5, -5])
    assert oscover.intersect(cover, cover) == 2
    assert oscover.adjunction_genus(cover) == 7
    k = oscover.canonical_class()
    assert oscover.intersect(k, k) == -8


def test_lin_equiv_and_relabel():
    a = oscover.PicClass(c=1, fibers=[2, 0, 0, 0])
    b = oscover.PicClass(c=1, fibers=[0, 2, 0, 0])
    assert oscover.lin_equiv(a, b)
    swapped = oscover.relabel(a, [1, 0, 2, 3])
    assert oscover.intersect(swapped, swapped) == oscover.intersect(a, a)


def test_check_cover():
    spec = oscover.CoverSpec(d=2, n=13, rho=1, g=7, gamma=[0, 5, 5, 5])
    assert oscover.check_cover(spec)
    bad = oscover.CoverSpec(d=2, n=13, rho=1, g=8, gamma=[0, 5, 5, 5])
    report = oscover.check_cover(bad)
    assert not report
    assert report.violations() == ["genus-bound"]


def test_build_family_worked_example():
    fam = oscover.build_family(2, oscover.MuVector([0, 1, 1, 1]), oscover.EpsilonChoice())
    assert (fam.n, fam.g) == (13, 7)
    assert list(fam.gamma.gamma) == [0, 5, 5, 5]
    assert fam.family_dimension == 1
    assert fam.witness_matches_type

    doc = json.loads(fam.to_json())
    assert doc["verification"]["all"] is True
    assert doc["witness"]["readings"]["z_prime_fiber"] == "w1"
    assert doc["witness"]["constituents"]["D_0"]["class"]["c"] == 12

    cert = oscover.hyperelliptic_weierstrass_certificate(fam)
    assert cert.pass_
    assert cert.cover.n == 13


def test_degree_routes_agree():
    mu = oscover.MuVector([0, 1, 1, 1])
    eps = oscover.EpsilonChoice(family="A", k=0)
    gamma = oscover.gamma_of(3, mu, eps)
    assert list(gamma.gamma) == [0, 9, 9, 9]
    dg = oscover.degree_genus_of(3, gamma)
    assert (dg.n, dg.g) == (25, 13)
    assert oscover.closed_form_degree(3, mu, eps) == 25
    lam = oscover.lambda_class(3, dg.n, gamma)
    assert oscover.adjunction_genus(lam) == 13


def test_enumeration_and_oracle():
    rows = oscover.enumerate_families(oscover.SweepConfig(d_max=2, mu_max=1, genus_max=10))
    assert any(r.d == 2 and list(r.gamma.gamma) == [0, 5, 5, 5] for r in rows)

    admissible = oscover.enumerate_admissible(1, 1, 1)
    assert [list(t.gamma.gamma) for t in admissible] == [[0, 1, 1, 1]]

    assert oscover.oracle_crosscheck(1, 5).clean
    assert not oscover.oracle_crosscheck(1, 5, oscover.FaultInjection.parity).clean

    gap = oscover.construction_gap(1, 3)
    assert [list(t.gamma) for t in gap.unconstructed] == [[0, 1, 1, 1]]


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        oscover.MuVector([1, 1, 1, 1])
    with pytest.raises(ValueError):
        oscover.degree_genus_of(2, oscover.TypeVector([1, 5, 5, 5]))
    with pytest.raises(ValueError):
        oscover.osculating_gap_order(4, 3)


def test_verify_suite_small():
    report = oscover.verify_paper(2, 2)
    assert report.pass_
    doc = json.loads(report.to_json())
    assert len(doc["criteria"]) == 9
