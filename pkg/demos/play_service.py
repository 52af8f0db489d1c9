#!/usr/bin/env python3
# Drive the HTTP play service in-process: create a session, play a human
# move, and let the engine answer.  The same endpoints back the browser
# client in frontend/.

from starlette.testclient import TestClient

from sproutgames.api import create_app

client = TestClient(create_app())

session = client.post(
    "/sessions",
    json={"kind": "cs4", "params": {"p": 3, "q": 4}, "human_player": 1},
).json()
sid = session["id"]
print(f"session {sid[:8]}... created at {session['state']}, player {session['turn']} to move")

moves = client.get(f"/sessions/{sid}/moves", params={"hints": True}).json()["moves"]
print(f"{len(moves)} legal moves; first three with hints:")
for entry in moves[:3]:
    m = entry["move"]
    print(f"  spots {m['i']}-{m['j']} split ({m['a']},{m['b']})"
          f" -> {entry['state_after']} (value {entry['nimber']})")

blunder = next(entry for entry in moves if entry["nimber"] != 0)
client.post(f"/sessions/{sid}/moves", json={"move": blunder["move"]})
print(f"\nhuman blunders into {blunder['state_after']} (value {blunder['nimber']})")

reply = client.post(f"/sessions/{sid}/engine-move", params={"hints": True}).json()
m = reply["move"]
print(f"engine answers with component {m['component']}, spots {m['i']}-{m['j']},"
      f" split ({m['a']},{m['b']})")
print(f"position now {reply['session']['state']}, value {reply['session']['nimber']}")

analysis = client.get("/analyze", params={"state": "BS2[3,3]"}).json()
print(f"\nanalysis of BS2[3,3]: value {analysis['nimber']},"
      f" {analysis['winner']} player wins under normal play")
print("\nrun the real server with:  sproutgames serve --port 8000")
