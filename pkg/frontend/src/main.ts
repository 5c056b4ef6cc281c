// Entry point: connect to the engine service, pump messages through the
// reducer, and wire the controls.

import { encodeClientMessage, decodeServerMessage, type ClientMessage } from "./protocol.js";
import { applyServerMessage, initialModel, type SessionModel } from "./state.js";
import { render } from "./ui.js";

let model: SessionModel = initialModel();
let ws: WebSocket | null = null;
let retryMs = 1000;

function wsUrl(): string {
  // The page is usually served by a plain static file server, so the
  // page's own host says nothing about where the engine lives.
  const params = new URLSearchParams(window.location.search);
  const host = params.get("server") || "127.0.0.1:8000";
  return `ws://${host}/ws`;
}

function connect(): void {
  ws = new WebSocket(wsUrl());

  ws.onopen = () => {
    retryMs = 1000;
  };

  ws.onmessage = (event) => {
    try {
      model = applyServerMessage(model, decodeServerMessage(String(event.data)));
    } catch (err) {
      model = { ...model, lastError: String(err) };
    }
    render(model);
  };

  ws.onclose = () => {
    model = { ...model, connected: false };
    render(model);
    setTimeout(connect, retryMs);
    retryMs = Math.min(retryMs * 2, 8000);
  };

  ws.onerror = () => {
    // onclose handles the retry.
  };
}

function send(msg: ClientMessage): void {
  if (ws && ws.readyState === WebSocket.OPEN) {
    ws.send(encodeClientMessage(msg));
  }
}

function onClick(id: string, handler: () => void): void {
  const button = document.getElementById(id);
  if (button) button.addEventListener("click", handler);
}

function wireControls(): void {
  // A stroke is three quick contacts; the engine chains them itself.
  onClick("btn-stroke", () => {
    for (const region of ["front", "top", "back"] as const) {
      send({ type: "touch", region });
    }
  });
  onClick("btn-stroke-wrong", () => {
    for (const region of ["back", "top", "front"] as const) {
      send({ type: "touch", region });
    }
  });
  onClick("btn-pat", () => send({ type: "touch", region: "top" }));
  onClick("btn-approach", () => send({ type: "proximity", distance_m: 0.5 }));
  onClick("btn-step-back", () => send({ type: "proximity", distance_m: 2.0 }));
  onClick("btn-leave", () => send({ type: "proximity", distance_m: 5.0 }));
  onClick("btn-look", () => send({ type: "gaze", angle_deg: 5 }));
  onClick("btn-look-away", () => send({ type: "gaze", angle_deg: 120 }));

  const input = document.getElementById("word-input") as HTMLInputElement | null;
  const say = () => {
    const text = input?.value.trim();
    if (text) {
      send({ type: "word", text });
      if (input) input.value = "";
    }
  };
  onClick("btn-say", say);
  input?.addEventListener("keydown", (event) => {
    if (event.key === "Enter") say();
  });
  for (const word of ["hello", "good", "bad", "food"]) {
    onClick(`btn-word-${word}`, () => send({ type: "word", text: word }));
  }
}

wireControls();
render(model);
connect();
