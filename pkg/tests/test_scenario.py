import pytest

from firebreak import (
    ADAPTIVE,
    KNOWN_WIND,
    OPEN_LOOP,
    ScenarioParseError,
    ScenarioValidationError,
    parse_scenario,
    serialize_scenario,
)
from firebreak.presets import PRESET_NAMES, preset_scenario

FEEDBACK_DOC = """\
# reference setup, known-wind controller
geometry.L1 = 50
geometry.L2 = 50
geometry.w_frac = 0.66666666666666663
grid.nx = 81
grid.ny = 80
grid.dt = 0.01
physics.epsilon = 0.2136
physics.A = 187.93
physics.C = 7.2558e-4
physics.gamma = 558.49
physics.T_a = 300
wind.vx = 1
wind.vy = 0
ic.kind = gaussian
ic.Tc = 1000
ic.w = 10
ic.cx = 25
ic.cy = 25
controller.kind = known_wind
controller.k = 1
run.t_final = 20
"""


class TestParse:
    def test_reference_document(self):
        s = parse_scenario(FEEDBACK_DOC)
        assert s.params.epsilon == 0.2136
        assert s.params.A == 187.93
        assert s.params.C == 7.2558e-4
        assert s.params.gamma == 558.49
        assert s.params.T_a == 300.0
        assert s.controller.kind == KNOWN_WIND and s.controller.k == 1.0
        assert s.grid.n_star == 54
        assert s.params.C_S == 0.0  # default
        assert s.wind.v_bar == 1.0  # derived from (vx, vy)
        assert s.output_every == 1
        assert s.guard == 1.0e6

    def test_negative_diffusivity_rejected(self):
        doc = FEEDBACK_DOC.replace("physics.epsilon = 0.2136", "physics.epsilon = -1")
        with pytest.raises(ScenarioValidationError):
            parse_scenario(doc)

    def test_unknown_key_rejected(self):
        with pytest.raises(ScenarioParseError):
            parse_scenario(FEEDBACK_DOC + "physics.viscosity = 3\n")

    def test_duplicate_key_rejected(self):
        with pytest.raises(ScenarioParseError):
            parse_scenario(FEEDBACK_DOC + "wind.vx = 2\n")

    def test_missing_required_key_rejected(self):
        doc = FEEDBACK_DOC.replace("run.t_final = 20\n", "")
        with pytest.raises(ScenarioParseError):
            parse_scenario(doc)

    def test_malformed_line_rejected(self):
        with pytest.raises(ScenarioParseError):
            parse_scenario(FEEDBACK_DOC + "what is this\n")

    def test_non_integer_resolution_rejected(self):
        doc = FEEDBACK_DOC.replace("grid.nx = 81", "grid.nx = 81.5")
        with pytest.raises(ScenarioParseError):
            parse_scenario(doc)

    def test_non_aligned_protected_edge_rejected(self):
        doc = FEEDBACK_DOC.replace("grid.nx = 81", "grid.nx = 80")
        with pytest.raises(ScenarioValidationError, match="grid column"):
            parse_scenario(doc)

    def test_inapplicable_keys_rejected(self):
        doc = FEEDBACK_DOC.replace("controller.kind = known_wind", "controller.kind = open_loop")
        with pytest.raises(ScenarioValidationError):
            parse_scenario(doc)  # open loop must not carry a gain

    def test_adaptive_requires_lambda(self):
        doc = FEEDBACK_DOC.replace("controller.kind = known_wind", "controller.kind = adaptive")
        with pytest.raises(ScenarioParseError):
            parse_scenario(doc)
        s = parse_scenario(doc + "controller.lambda = 0.1\n")
        assert s.controller.kind == ADAPTIVE
        assert s.controller.lam == 0.1
        assert s.controller.v_hat_init == 0.0

    def test_uniform_ic_rejects_gaussian_keys(self):
        doc = FEEDBACK_DOC.replace("ic.kind = gaussian", "ic.kind = uniform")
        with pytest.raises(ScenarioValidationError):
            parse_scenario(doc)
        trimmed = "\n".join(
            line
            for line in doc.splitlines()
            if not line.startswith(("ic.Tc", "ic.w ", "ic.cx", "ic.cy"))
        )
        s = parse_scenario(trimmed)
        assert s.ic.kind == "uniform"


class TestRoundTrip:
    def test_reference_document_round_trips(self):
        s = parse_scenario(FEEDBACK_DOC)
        assert parse_scenario(serialize_scenario(s)) == s

    @pytest.mark.parametrize("name", PRESET_NAMES)
    def test_every_preset_round_trips(self, name):
        for regime in (OPEN_LOOP, KNOWN_WIND, ADAPTIVE):
            s = preset_scenario(name, regime=regime)
            assert parse_scenario(serialize_scenario(s)) == s
