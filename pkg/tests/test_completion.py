import pytest

from phda import fixtures as F
from phda.completion import complete, complete_morphism, completion_of, counit
from phda.errors import NotTotalHDA
from phda.model import compose, identity, is_hda, validate_morphism, validate_phda
from phda.words import single, star, word


def test_completion_outputs_are_total_and_valid():
    for name, mk in F.MODELS.items():
        chi, unit = complete(mk())
        assert validate_phda(chi) == [], name
        assert is_hda(chi), name
        assert validate_morphism(unit) == [], name


def test_split_segment_completion_golden():
    chi, unit = complete(F.split_segment())
    assert sorted(chi.cells) == ["e#[(1,0)]", "e#[(1,1)]", "e#[]", "p0#[]", "p1#[]"]
    assert chi.initial == "p0#[]"
    assert chi.faces[("e#[]", single(1, 0))] == "e#[(1,0)]"
    assert chi.faces[("e#[]", single(1, 1))] == "e#[(1,1)]"
    assert unit.mapping == {"p0": "p0#[]", "p1": "p1#[]", "e": "e#[]"}


def test_punctured_cube_completion_restores_the_cube():
    x = F.punctured_cube()
    c = completion_of(x)
    by_dim = {}
    for cell in c.model.cells.values():
        by_dim[cell.dim] = by_dim.get(cell.dim, 0) + 1
    assert by_dim == {0: 8, 1: 12, 2: 6, 3: 1}
    # the two single-step routes to the removed edge merge by congruence
    s1 = x.faces[("***", single(1, 1))]
    s2 = x.faces[("***", single(2, 1))]
    assert c.class_id(s1, single(1, 1)) == c.class_id(s2, single(1, 1)) == c.class_id("***", word((1, 1), (2, 1)))
    # the far vertex composite agrees with its chain value
    w = star(star(single(1, 1), single(2, 0)), single(1, 1))
    assert w == word((1, 1), (2, 1), (3, 0))
    assert c.class_id("***", w) == c.class_id(x.faces[("***", w)])


def test_counit_requires_total_model():
    with pytest.raises(NotTotalHDA):
        counit(F.split_segment())


def test_counit_inverse_to_unit_on_total_models():
    for name in F.TOTAL_MODELS:
        x = F.MODELS[name]()
        chi, unit = complete(x)
        mu = counit(x)
        assert validate_morphism(mu) == [], name
        assert compose(mu, unit).mapping == identity(x).mapping, name
        # bijective in every grade
        inverse = {}
        for k, v in mu.mapping.items():
            assert inverse.setdefault(v, k) == k, name
        assert len(inverse) == len(chi.cells) == len(x.cells), name


def test_triangle_identity():
    for name in ("split_segment", "notched_square", "full_square", "glued_square"):
        x = F.MODELS[name]()
        chi, unit = complete(x)
        tri = compose(counit(chi), complete_morphism(unit))
        assert tri.mapping == identity(chi).mapping, name


def test_completed_morphism_validates_and_is_functorial():
    fold = F.branch_fold(2, 1)
    cf = complete_morphism(fold)
    assert validate_morphism(cf) == []
    ci = complete_morphism(identity(F.full_square()))
    assert ci.mapping == identity(ci.source).mapping


def test_unit_naturality():
    for f in (F.branch_fold(2, 1), F.double_square_fold(), F.loop_unrolling(2)):
        _, unit_src = complete(f.source)
        _, unit_tgt = complete(f.target)
        assert compose(complete_morphism(f), unit_src).mapping == compose(unit_tgt, f).mapping


def test_local_equations_hold_exhaustively():
    for name in ("split_segment", "punctured_cube", "notched_square", "glued_square"):
        chi, _ = complete(F.MODELS[name]())
        for cid, cell in chi.cells.items():
            for i in range(1, cell.dim):
                for j in range(1, i + 1):
                    for a in (0, 1):
                        for b in (0, 1):
                            lhs = chi.faces[(chi.faces[(cid, single(j, b))], single(i, a))]
                            rhs = chi.faces[(chi.faces[(cid, single(i + 1, a))], single(j, b))]
                            assert lhs == rhs, (name, cid, i, j, a, b)


def test_labelling_equation_on_two_cells():
    for name in ("punctured_cube", "notched_square", "glued_square"):
        chi, _ = complete(F.MODELS[name]())
        for cid, cell in chi.cells.items():
            if cell.dim != 2:
                continue
            for i in (1, 2):
                past = chi.cells[chi.faces[(cid, single(i, 0))]].label
                future = chi.cells[chi.faces[(cid, single(i, 1))]].label
                assert past == future, (name, cid, i)


def test_completion_of_glued_square_is_the_full_square():
    chi, _ = complete(F.glued_square())
    by_dim = {}
    for cell in chi.cells.values():
        by_dim[cell.dim] = by_dim.get(cell.dim, 0) + 1
    assert by_dim == {0: 4, 1: 4, 2: 1}
    assert is_hda(chi)
