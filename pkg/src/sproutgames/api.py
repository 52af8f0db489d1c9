"""Session-based HTTP API so a human can play against the optimal engine.

Wire format is JSON throughout and every response carries the position in
the same textual notation the CLI accepts.  Moves:

    {"kind": "split", "component": c, "i": i, "j": j, "a": a, "b": b}
        join spots i < j of component c, keeping a (resp. b) of the
        remaining tips of spot i (resp. j) on the first side
    {"kind": "forced"}                  the unique two-cross opening join
    {"kind": "join", "xi": i, "yj": j}  the two-cross reply (i, j >= 2)

Normal play convention: the player unable to move loses, so the winner is
whoever moved last.  Value annotations ("hints") are omitted from
human-facing move lists unless ``?hints=true``.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from typing import Any

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel

from .analysis import analyze_position
from .bs2 import Bs2Move, Bs2Position, bs2_engine_move, bs2_intermediate_nimber
from .circular import CircularState, GameSum, GrundyTable, Move, apply_move, best_move, legal_moves
from .notation import NotationError, parse_position


@dataclass
class Session:
    id: str
    kind: str
    params: dict
    human_player: int
    position: Any  # GameSum | Bs2Position
    history: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def turn(self) -> int:
        return 1 if len(self.history) % 2 == 0 else 2

    def is_finished(self) -> bool:
        if isinstance(self.position, Bs2Position):
            return self.position.is_terminal()
        return self.position.is_terminal()

    def winner(self) -> int | None:
        if not self.is_finished():
            return None
        # The side to move has no move and loses; with no moves at all the
        # first player never gets to move.
        return 2 if self.turn == 1 else 1


def _build_position(kind: str, params: dict):
    if kind == "cs4":
        p, q = int(params["p"]), int(params["q"])
        if p < 0 or q < 0:
            raise ValueError("tip counts must be non-negative")
        return GameSum([(p, 1, q, 1)])
    if kind == "circular":
        return GameSum([CircularState(params["tips"])])
    if kind == "bs2":
        return Bs2Position.start(int(params["p"]), int(params["q"]))
    raise ValueError(f"unknown game kind {kind!r}; pick cs4, circular, or bs2")


def _move_to_wire(position, move) -> dict:
    if isinstance(position, Bs2Position):
        if move.kind == "forced":
            return {"kind": "forced"}
        if move.kind == "join":
            return {"kind": "join", "xi": move.xi, "yj": move.yj}
        m = move.move
        return {"kind": "split", "component": move.component, "i": m.i, "j": m.j, "a": m.a, "b": m.b}
    return {"kind": "split", "component": move[0], "i": move[1].i, "j": move[1].j,
            "a": move[1].a, "b": move[1].b}


def _wire_to_move(position, wire: dict):
    kind = wire.get("kind")
    if isinstance(position, Bs2Position):
        if kind == "forced":
            return Bs2Move("forced")
        if kind == "join":
            return Bs2Move("join", xi=int(wire["xi"]), yj=int(wire["yj"]))
        if kind == "split":
            return Bs2Move(
                "split",
                component=int(wire["component"]),
                move=Move(int(wire["i"]), int(wire["j"]), int(wire["a"]), int(wire["b"])),
            )
        raise ValueError(f"unknown move kind {kind!r} for a two-cross session")
    if kind != "split":
        raise ValueError(f"unknown move kind {kind!r} for a circular session")
    return (int(wire["component"]), Move(int(wire["i"]), int(wire["j"]), int(wire["a"]), int(wire["b"])))


def _legal_wire_moves(position) -> list[dict]:
    if isinstance(position, Bs2Position):
        return [_move_to_wire(position, m) for m in position.legal_moves()]
    return [
        _move_to_wire(position, (idx, m))
        for idx, comp in enumerate(position)
        for m in legal_moves(comp)
    ]


def _apply(position, move):
    if isinstance(position, Bs2Position):
        return position.apply(move)
    idx, m = move
    if not (0 <= idx < len(position)):
        raise ValueError(f"no component {idx}")
    s1, s2 = apply_move(position[idx], m)
    return GameSum(tuple(position[:idx]) + (s1, s2) + tuple(position[idx + 1:]))


def _position_nimber(position, table: GrundyTable) -> int:
    if isinstance(position, Bs2Position):
        if position.phase == "start":
            return 0  # single forced child of nonzero value
        if position.phase == "after-move-1":
            return bs2_intermediate_nimber(position.p, position.q, table)
        return position.components.nimber(table)
    return position.nimber(table)


def _engine_choice(position, table: GrundyTable):
    if isinstance(position, Bs2Position):
        return bs2_engine_move(position, table)
    bm = best_move(position, table)
    if bm is None:
        return None
    return (bm.component, bm.move)


def replay_position(kind: str, params: dict, history: list[dict]):
    """Rebuild the position a session must hold after the given history."""
    position = _build_position(kind, params)
    for wire in history:
        position = _apply(position, _wire_to_move(position, wire))
    return position


def _session_json(session: Session, table: GrundyTable, hints: bool = False) -> dict:
    position = session.position
    finished = session.is_finished()
    data = {
        "id": session.id,
        "kind": session.kind,
        "params": session.params,
        "human_player": session.human_player,
        "status": "finished" if finished else "ongoing",
        "winner": session.winner(),
        "turn": None if finished else session.turn,
        "state": position.notation(),
        "history": list(session.history),
    }
    if isinstance(position, Bs2Position):
        data["phase"] = position.phase
        data["components"] = (
            [list(c) for c in position.components] if position.components is not None else None
        )
    else:
        data["components"] = [list(c) for c in position]
    if hints:
        data["nimber"] = _position_nimber(position, table)
    return data


class CreateSessionRequest(BaseModel):
    kind: str
    params: dict = {}
    human_player: int = 1


class MoveRequest(BaseModel):
    move: dict
    player: int | None = None


def create_app() -> FastAPI:
    app = FastAPI(title="sproutgames play service")
    sessions: dict[str, Session] = {}
    table = GrundyTable()

    def _get_session(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"no session {session_id}")
        return session

    @app.post("/sessions", status_code=201)
    def create_session(request: CreateSessionRequest):
        if request.human_player not in (1, 2):
            raise HTTPException(status_code=400, detail="human_player must be 1 or 2")
        try:
            position = _build_position(request.kind, request.params)
        except (KeyError, TypeError) as exc:
            raise HTTPException(status_code=400, detail=f"missing or malformed parameter: {exc}")
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        session = Session(
            id=uuid.uuid4().hex,
            kind=request.kind,
            params=request.params,
            human_player=request.human_player,
            position=position,
        )
        sessions[session.id] = session
        return _session_json(session, table)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str, hints: bool = Query(default=False)):
        session = _get_session(session_id)
        return _session_json(session, table, hints=hints)

    @app.get("/sessions/{session_id}/moves")
    def list_moves(session_id: str, hints: bool = Query(default=False)):
        session = _get_session(session_id)
        if session.is_finished():
            raise HTTPException(
                status_code=409,
                detail={
                    "message": "session is finished",
                    "moves": [],
                    "status": "finished",
                    "winner": session.winner(),
                },
            )
        moves = []
        for wire in _legal_wire_moves(session.position):
            after = _apply(session.position, _wire_to_move(session.position, wire))
            entry = {"move": wire, "state_after": after.notation()}
            if hints:
                value = _position_nimber(after, table)
                entry["nimber"] = value
                entry["winning"] = value == 0
            moves.append(entry)
        return {"status": "ongoing", "turn": session.turn, "moves": moves}

    def _advance(session: Session, move, wire: dict) -> None:
        session.position = _apply(session.position, move)
        session.history.append(wire)

    @app.post("/sessions/{session_id}/moves")
    def submit_move(session_id: str, request: MoveRequest, hints: bool = Query(default=False)):
        session = _get_session(session_id)
        with session.lock:
            if session.is_finished():
                raise HTTPException(status_code=409, detail="session is finished")
            mover = request.player if request.player is not None else session.human_player
            if mover != session.turn:
                raise HTTPException(
                    status_code=409,
                    detail=f"it is player {session.turn}'s turn, not player {mover}'s",
                )
            try:
                move = _wire_to_move(session.position, request.move)
                session_after = _apply(session.position, move)
            except (KeyError, TypeError) as exc:
                raise HTTPException(status_code=400, detail=f"malformed move: {exc}")
            except ValueError as exc:
                raise HTTPException(
                    status_code=400,
                    detail={
                        "message": str(exc),
                        "legal_moves": _legal_wire_moves(session.position),
                    },
                )
            session.position = session_after
            session.history.append(dict(request.move))
        return _session_json(session, table, hints=hints)

    @app.post("/sessions/{session_id}/engine-move")
    def engine_move(session_id: str, hints: bool = Query(default=False)):
        session = _get_session(session_id)
        with session.lock:
            if session.is_finished():
                raise HTTPException(status_code=409, detail="session is finished")
            move = _engine_choice(session.position, table)
            if move is None:
                raise HTTPException(status_code=409, detail="no move is available")
            wire = _move_to_wire(session.position, move)
            _advance(session, move, wire)
        return {"move": wire, "session": _session_json(session, table, hints=hints)}

    @app.get("/analyze")
    def analyze(state: str = Query(...)):
        try:
            components = parse_position(state)
        except NotationError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return analyze_position(components, table)

    app.state.sessions = sessions
    app.state.table = table
    return app


app = create_app()
