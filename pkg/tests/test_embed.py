"""Embeddings into the rationals and into U."""

from ordalg import (Level, EmbedCertificate, NotEmbeddable, SPINE, Side,
                    U_LINE, compare_points, condenses_to_one, embed_into_u,
                    parse)
from ordalg.embed import NEW


def test_countable_goes_to_middle_block():
    cert = embed_into_u(parse("z + q"), budget=200, seed=0)
    assert isinstance(cert, EmbedCertificate)
    assert cert.target == "Q(mid)"
    assert cert.verified_pairs == 200


def test_w1_rides_the_spine():
    cert = embed_into_u(parse("w1"), budget=300, seed=0)
    assert isinstance(cert, EmbedCertificate)
    assert cert.target == "U"
    sides = {img.side for _, img in cert.spine_entries}
    assert sides == {Side.POS}


def test_not_embeddable_cases():
    for text in ("w1 + 1", "w2", "q + U + q", "w1 + w1*", "rev(w2)"):
        res = embed_into_u(parse(text), budget=50, seed=0)
        assert isinstance(res, NotEmbeddable), text


def test_sum_with_both_wings():
    cert = embed_into_u(parse("w1* + q + w1"), budget=300, seed=0)
    assert isinstance(cert, EmbedCertificate)
    sides = {img.side for _, img in cert.spine_entries}
    assert Side.POS in sides and Side.NEG in sides


def test_new_markers_for_missing_suprema():
    # w1 copies of q has no point at any spine position
    cert = embed_into_u(parse("w1*q"), budget=300, seed=0)
    assert isinstance(cert, EmbedCertificate)
    assert any(src == NEW for src, _ in cert.spine_entries)


def test_spine_entries_sorted():
    cert = embed_into_u(parse("w1* + w1"), budget=300, seed=0)
    imgs = [img for _, img in cert.spine_entries]
    for a, b in zip(imgs, imgs[1:]):
        assert compare_points(U_LINE, a, b) == -1


def test_map_preserves_order():
    t = parse("w1*(1 + q)")
    cert = embed_into_u(t, budget=400, seed=3)
    assert isinstance(cert, EmbedCertificate)
    from ordalg import sample_points
    pts = sample_points(t, 30, seed=8)
    imgs = [cert.map_point(p) for p in pts]
    for i, p in enumerate(pts):
        for j, q in enumerate(pts):
            assert compare_points(t, p, q) == \
                compare_points(U_LINE, imgs[i], imgs[j])


def test_certificate_json():
    doc = embed_into_u(parse("w1"), budget=100, seed=0).to_json()
    assert doc["target"] == "U"
    assert doc["verifiedPairs"] == 100
    assert all("image" in e for e in doc["spine"])
