import pytest
from starlette.testclient import TestClient

from sproutgames.api import create_app, replay_position


@pytest.fixture()
def client():
    return TestClient(create_app())


def create(client, kind, params, human_player=1):
    response = client.post(
        "/sessions", json={"kind": kind, "params": params, "human_player": human_player}
    )
    assert response.status_code == 201, response.text
    return response.json()


def test_create_cs4_session(client):
    session = create(client, "cs4", {"p": 3, "q": 4})
    assert session["state"] == "CS[3,1,4,1]"
    assert session["status"] == "ongoing" and session["turn"] == 1
    hinted = client.get(f"/sessions/{session['id']}", params={"hints": True}).json()
    assert hinted["nimber"] == 4


def test_create_rejections(client):
    assert client.post("/sessions", json={"kind": "cs4", "params": {"p": -1, "q": 2}}).status_code == 400
    assert client.post("/sessions", json={"kind": "bs2", "params": {"p": 2, "q": 3}}).status_code == 400
    assert client.post("/sessions", json={"kind": "nope", "params": {}}).status_code == 400
    assert client.post("/sessions", json={"kind": "cs4", "params": {}}).status_code == 400
    assert client.get("/sessions/does-not-exist").status_code == 404


def test_move_listing_annotations(client):
    session = create(client, "cs4", {"p": 1, "q": 1})
    plain = client.get(f"/sessions/{session['id']}/moves").json()
    assert len(plain["moves"]) == 2
    assert all("nimber" not in entry for entry in plain["moves"])  # fair play by default
    hinted = client.get(f"/sessions/{session['id']}/moves", params={"hints": True}).json()
    assert [entry["nimber"] for entry in hinted["moves"]] == [0, 0]
    assert all(entry["winning"] for entry in hinted["moves"])


def test_bs2_opening_is_forced(client):
    session = create(client, "bs2", {"p": 3, "q": 3})
    moves = client.get(f"/sessions/{session['id']}/moves").json()["moves"]
    assert moves == [{"move": {"kind": "forced"}, "state_after": "BS2[3,3]"}]


def test_submit_engine_alternation_and_replay(client):
    session = create(client, "cs4", {"p": 2, "q": 4})
    sid = session["id"]
    # play a deliberately bad human move (one that leaves a nonzero value)
    hinted = client.get(f"/sessions/{sid}/moves", params={"hints": True}).json()
    bad = next(entry for entry in hinted["moves"] if entry["nimber"] != 0)
    after_human = client.post(f"/sessions/{sid}/moves", json={"move": bad["move"]})
    assert after_human.status_code == 200
    reply = client.post(f"/sessions/{sid}/engine-move", params={"hints": True})
    assert reply.status_code == 200
    body = reply.json()
    assert body["session"]["nimber"] == 0  # the engine restores value 0
    # replaying the history reproduces the live state exactly
    state = client.get(f"/sessions/{sid}").json()
    rebuilt = replay_position("cs4", {"p": 2, "q": 4}, state["history"])
    assert rebuilt.notation() == state["state"]


def test_wrong_turn_and_illegal_move(client):
    session = create(client, "cs4", {"p": 2, "q": 2}, human_player=2)
    sid = session["id"]
    # player 1 is the engine seat; the human (player 2) may not move yet
    response = client.post(
        f"/sessions/{sid}/moves",
        json={"move": {"kind": "split", "component": 0, "i": 0, "j": 2, "a": 0, "b": 0}},
    )
    assert response.status_code == 409
    client.post(f"/sessions/{sid}/engine-move")
    response = client.post(
        f"/sessions/{sid}/moves",
        json={"move": {"kind": "split", "component": 0, "i": 0, "j": 1, "a": 0, "b": 0}},
    )
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert "triangle" in detail["message"]
    assert detail["legal_moves"]  # the rejection lists what was legal


def test_finished_session_conflicts(client):
    session = create(client, "circular", {"tips": [0, 0, 9, 0]})
    sid = session["id"]
    assert session["status"] == "finished"
    assert session["winner"] == 2  # player 1 has no move at all
    listing = client.get(f"/sessions/{sid}/moves")
    assert listing.status_code == 409
    assert listing.json()["detail"]["moves"] == []
    assert listing.json()["detail"]["status"] == "finished"
    assert client.post(f"/sessions/{sid}/engine-move").status_code == 409


def test_engine_vs_engine_bs2_second_player_wins(client):
    session = create(client, "bs2", {"p": 3, "q": 3})
    sid = session["id"]
    state = session
    while state["status"] == "ongoing":
        state = client.post(f"/sessions/{sid}/engine-move").json()["session"]
    assert state["winner"] == 2
    assert len(state["history"]) % 2 == 0  # player 2 moved last
    rebuilt = replay_position("bs2", {"p": 3, "q": 3}, state["history"])
    assert rebuilt.notation() == state["state"]


def test_engine_moves_restore_zero_along_a_bs2_game(client):
    session = create(client, "bs2", {"p": 4, "q": 4})
    sid = session["id"]
    state = session
    import random

    rng = random.Random(7)
    while state["status"] == "ongoing":
        if state["turn"] == 1:  # adversarial human: random legal move
            moves = client.get(f"/sessions/{sid}/moves").json()["moves"]
            move = rng.choice(moves)["move"]
            state = client.post(f"/sessions/{sid}/moves", json={"move": move}).json()
        else:
            body = client.post(f"/sessions/{sid}/engine-move", params={"hints": True}).json()
            state = body["session"]
            if state["status"] == "ongoing" and state["phase"] == "decomposed":
                assert state["nimber"] == 0
    assert state["winner"] == 2


def test_analyze_endpoint(client):
    report = client.get("/analyze", params={"state": "CS[3,1,4,1]"}).json()
    assert report["nimber"] == 4 and report["winner"] == "first"
    assert report["best_move"] is not None
    report = client.get("/analyze", params={"state": "BS2[3,3]"}).json()
    assert report["nimber"] == 0 and report["winner"] == "second"
    report = client.get("/analyze", params={"state": "CS[0,0,9,0]"}).json()
    assert report["terminal"] is True and report["nimber"] == 0
    assert client.get("/analyze", params={"state": "CS[oops"}).status_code == 400
