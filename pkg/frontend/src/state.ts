// Client-side session model: a pure reducer over incoming server
// messages.  The server owns all timing (directives arrive already
// arbitrated and passives are re-broadcast when a queue drains), so the
// client simply shows the latest directive and the latest state snapshot.

import type { DirectiveBody, ServerMessage, StateBody } from "./protocol.js";

export interface SessionModel {
  connected: boolean;
  face: string;
  aura: { hue: number; intensity: number } | null;
  sound: string | null;
  bubble: string | null;
  reason: DirectiveBody["reason"] | null;
  state: StateBody | null;
  lastAck: string | null;
  lastError: string | null;
  directiveCount: number;
}

export function initialModel(): SessionModel {
  return {
    connected: false,
    face: "Neutral",
    aura: null,
    sound: null,
    bubble: null,
    reason: null,
    state: null,
    lastAck: null,
    lastError: null,
    directiveCount: 0,
  };
}

export function applyServerMessage(
  model: SessionModel, msg: ServerMessage,
): SessionModel {
  switch (msg.type) {
    case "state":
      return { ...model, connected: true, state: msg.body };
    case "directive":
      // Each directive fully replaces the display; absent modalities
      // switch off rather than linger.
      return {
        ...model,
        connected: true,
        face: msg.body.face,
        aura: msg.body.aura ?? null,
        sound: msg.body.sound ?? null,
        bubble: msg.body.bubble ?? null,
        reason: msg.body.reason,
        directiveCount: model.directiveCount + 1,
      };
    case "event_ack":
      return { ...model, lastAck: msg.kind, lastError: null };
    case "error":
      return { ...model, lastError: msg.detail };
  }
}
