import random

import pytest

from vbridge.errors import NotAKnotError, NotOneOverbridgeError
from vbridge.gauss import TAIL, parse_gauss_code, strand_table, to_gauss_code
from vbridge.welded import (
    UnknottingCertificate,
    WeldedMove,
    is_one_overbridge,
    replay_certificate,
    welded_unknot_certificate,
)
from util import random_one_overbridge_code


class TestIsOneOverbridge:
    def test_examples(self, dv, d3):
        assert is_one_overbridge(dv)
        assert not is_one_overbridge(d3)
        assert is_one_overbridge(parse_gauss_code("."))
        assert is_one_overbridge(parse_gauss_code("O1+U1+"))

    def test_links_rejected(self):
        with pytest.raises(NotAKnotError):
            is_one_overbridge(parse_gauss_code(".|."))


class TestCertificate:
    def test_virtual_trefoil(self, dv):
        cert = welded_unknot_certificate(dv)
        assert cert.initial == "O1+O2+U1+U2+"
        assert cert.final == "."
        assert cert.moves == (
            WeldedMove("swap", at=(0, 1)),
            WeldedMove("r1", chord=1),
            WeldedMove("r1", chord=2),
        )
        assert replay_certificate(cert)

    def test_kink(self):
        cert = welded_unknot_certificate(parse_gauss_code("O1+U1+"))
        assert cert.moves == (WeldedMove("r1", chord=1),)
        assert replay_certificate(cert)

    def test_chordless(self):
        cert = welded_unknot_certificate(parse_gauss_code("."))
        assert cert.moves == ()
        assert cert.final == "."
        assert replay_certificate(cert)

    def test_nested_kinks_need_no_swaps(self):
        cert = welded_unknot_certificate(parse_gauss_code("O1+O2+U2+U1+"))
        assert all(m.kind == "r1" for m in cert.moves)
        assert [m.chord for m in cert.moves] == [2, 1]
        assert replay_certificate(cert)

    def test_rejects_two_overbridges(self, d3):
        with pytest.raises(NotOneOverbridgeError):
            welded_unknot_certificate(d3)

    def test_move_count_bound(self):
        rng = random.Random(31)
        for _ in range(60):
            d = parse_gauss_code(random_one_overbridge_code(rng, max_chords=9))
            t = d.n_chords
            cert = welded_unknot_certificate(d)
            assert len(cert.moves) <= t * (t - 1) // 2 + t
            assert sum(1 for m in cert.moves if m.kind == "r1") == t

    def test_random_replay(self):
        rng = random.Random(37)
        for _ in range(60):
            d = parse_gauss_code(random_one_overbridge_code(rng))
            cert = welded_unknot_certificate(d)
            assert cert.initial == to_gauss_code(d)
            assert replay_certificate(cert)

    def test_swaps_stay_inside_overbridge(self):
        # every swap exchanges two arrowtails, so the single tail-bearing
        # strand is preserved move by move
        rng = random.Random(41)
        for _ in range(25):
            d = parse_gauss_code(random_one_overbridge_code(rng, max_chords=7))
            cert = welded_unknot_certificate(d)
            tokens = [
                (e.kind, e.chord_id) for e in d.components[0]
            ]
            for m in cert.moves:
                if m.kind == "swap":
                    i, j = m.at
                    assert tokens[i][0] == TAIL and tokens[j][0] == TAIL
                    tokens[i], tokens[j] = tokens[j], tokens[i]
                else:
                    tokens = [t for t in tokens if t[1] != m.chord]
                if tokens:
                    code = "".join(f"{k}{c}+" for k, c in tokens)
                    sub = parse_gauss_code(code)
                    assert is_one_overbridge(sub)


class TestReplayRejections:
    def _cert(self, dv):
        return welded_unknot_certificate(dv)

    def test_tampered_final(self, dv):
        cert = self._cert(dv)
        bad = UnknottingCertificate(cert.initial, cert.moves, "O9+U9+")
        r = replay_certificate(bad)
        assert not r and r.failed_at is None

    def test_dropped_move(self, dv):
        cert = self._cert(dv)
        bad = UnknottingCertificate(cert.initial, cert.moves[:-1], cert.final)
        r = replay_certificate(bad)
        assert not r and r.failed_at is None

    def test_swap_of_non_tails(self, dv):
        cert = self._cert(dv)
        moves = (WeldedMove("swap", at=(1, 2)),) + cert.moves[1:]
        r = replay_certificate(UnknottingCertificate(cert.initial, moves, "."))
        assert not r and r.failed_at == 0

    def test_nonadjacent_swap(self, dv):
        moves = (WeldedMove("swap", at=(0, 2)),)
        r = replay_certificate(UnknottingCertificate("O1+O2+U1+U2+", moves, "."))
        assert not r and r.failed_at == 0

    def test_premature_r1(self, dv):
        # chord 1's endpoints are not adjacent before the swap
        moves = (WeldedMove("r1", chord=1),)
        r = replay_certificate(UnknottingCertificate("O1+O2+U1+U2+", moves, "."))
        assert not r and r.failed_at == 0

    def test_unknown_chord(self):
        moves = (WeldedMove("r1", chord=9),)
        r = replay_certificate(UnknottingCertificate("O1+U1+", moves, "."))
        assert not r and r.failed_at == 0

    def test_unknown_kind(self):
        moves = (WeldedMove("detour", at=(0, 1)),)
        r = replay_certificate(UnknottingCertificate("O1+U1+", moves, "."))
        assert not r and r.failed_at == 0

    def test_bad_initial(self):
        r = replay_certificate(UnknottingCertificate("O1+", (), "."))
        assert not r and r.failed_at is None

    def test_link_initial(self):
        r = replay_certificate(UnknottingCertificate(".|.", (), "."))
        assert not r and r.failed_at is None


class TestJsonRoundtrip:
    def test_roundtrip(self, dv):
        cert = welded_unknot_certificate(dv)
        again = UnknottingCertificate.from_json(cert.to_json())
        assert again == cert
        assert replay_certificate(again)

    def test_json_shape(self, dv):
        data = welded_unknot_certificate(dv).to_json_dict()
        assert data == {
            "initial": "O1+O2+U1+U2+",
            "moves": [
                {"kind": "swap", "at": [0, 1]},
                {"kind": "r1", "chord": 1},
                {"kind": "r1", "chord": 2},
            ],
            "final": ".",
        }

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            UnknottingCertificate.from_json_dict(
                {"initial": ".", "moves": [{"kind": "slide"}], "final": "."}
            )
