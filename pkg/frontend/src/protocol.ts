// Wire protocol for the engine's websocket endpoint.  Field names, field
// order, and compact JSON (no spaces) match the server byte for byte, so
// encode(decode(line)) must reproduce the exact line.

export type TouchRegion = "front" | "back" | "top" | "left" | "right";

export type ClientMessage =
  | { type: "touch"; region: TouchRegion }
  | { type: "word"; text: string }
  | { type: "gaze"; angle_deg: number }
  | { type: "proximity"; distance_m: number }
  | { type: "get_state" }
  | { type: "set_compression"; factor: number };

export interface VA {
  valence: number;
  arousal: number;
}

export interface StateBody {
  mood: VA;
  temperament: VA & { archetype: string };
  needs: { touch: number; rest: number; social: number; hunger: number };
  clock: { t_ms: number; day: number };
}

export interface DirectiveBody {
  reason: "Response" | "NeedPrompt" | "PassiveMood";
  face: string;
  aura?: { hue: number; intensity: number };
  sound?: string;
  bubble?: string;
  duration_ms: number;
  t: number;
}

export type ServerMessage =
  | { type: "state"; body: StateBody }
  | { type: "directive"; body: DirectiveBody }
  | { type: "event_ack"; kind: string | null }
  | { type: "error"; detail: string };

const TOUCH_REGIONS: readonly string[] = ["front", "back", "top", "left", "right"];

function fail(reason: string): never {
  throw new Error(`malformed message: ${reason}`);
}

function asObject(value: unknown, where: string): Record<string, unknown> {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    fail(`${where} must be an object`);
  }
  return value as Record<string, unknown>;
}

function asNumber(value: unknown, where: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    fail(`${where} must be a finite number`);
  }
  return value;
}

function asString(value: unknown, where: string): string {
  if (typeof value !== "string") fail(`${where} must be a string`);
  return value;
}

function expectKeys(
  obj: Record<string, unknown>, keys: readonly string[], where: string,
): void {
  for (const key of Object.keys(obj)) {
    if (!keys.includes(key)) fail(`${where} has unexpected key ${key}`);
  }
}

function decodeVA(value: unknown, where: string): VA {
  const obj = asObject(value, where);
  expectKeys(obj, ["valence", "arousal"], where);
  return {
    valence: asNumber(obj.valence, `${where}.valence`),
    arousal: asNumber(obj.arousal, `${where}.arousal`),
  };
}

function decodeStateBody(value: unknown): StateBody {
  const obj = asObject(value, "state body");
  expectKeys(obj, ["mood", "temperament", "needs", "clock"], "state body");
  const temperament = asObject(obj.temperament, "temperament");
  expectKeys(temperament, ["valence", "arousal", "archetype"], "temperament");
  const needs = asObject(obj.needs, "needs");
  expectKeys(needs, ["touch", "rest", "social", "hunger"], "needs");
  const clock = asObject(obj.clock, "clock");
  expectKeys(clock, ["t_ms", "day"], "clock");
  return {
    mood: decodeVA(obj.mood, "mood"),
    temperament: {
      valence: asNumber(temperament.valence, "temperament.valence"),
      arousal: asNumber(temperament.arousal, "temperament.arousal"),
      archetype: asString(temperament.archetype, "temperament.archetype"),
    },
    needs: {
      touch: asNumber(needs.touch, "needs.touch"),
      rest: asNumber(needs.rest, "needs.rest"),
      social: asNumber(needs.social, "needs.social"),
      hunger: asNumber(needs.hunger, "needs.hunger"),
    },
    clock: {
      t_ms: asNumber(clock.t_ms, "clock.t_ms"),
      day: asNumber(clock.day, "clock.day"),
    },
  };
}

function decodeDirectiveBody(value: unknown): DirectiveBody {
  const obj = asObject(value, "directive body");
  expectKeys(
    obj,
    ["reason", "face", "aura", "sound", "bubble", "duration_ms", "t"],
    "directive body",
  );
  const reason = asString(obj.reason, "reason");
  if (!["Response", "NeedPrompt", "PassiveMood"].includes(reason)) {
    fail(`unknown directive reason ${reason}`);
  }
  const body: DirectiveBody = {
    reason: reason as DirectiveBody["reason"],
    face: asString(obj.face, "face"),
    duration_ms: asNumber(obj.duration_ms, "duration_ms"),
    t: asNumber(obj.t, "t"),
  };
  if (obj.aura !== undefined) {
    const aura = asObject(obj.aura, "aura");
    expectKeys(aura, ["hue", "intensity"], "aura");
    body.aura = {
      hue: asNumber(aura.hue, "aura.hue"),
      intensity: asNumber(aura.intensity, "aura.intensity"),
    };
  }
  if (obj.sound !== undefined) body.sound = asString(obj.sound, "sound");
  if (obj.bubble !== undefined) body.bubble = asString(obj.bubble, "bubble");
  return body;
}

export function decodeServerMessage(line: string): ServerMessage {
  let raw: unknown;
  try {
    raw = JSON.parse(line);
  } catch {
    fail("not valid JSON");
  }
  const obj = asObject(raw, "message");
  const type = asString(obj.type, "type");
  switch (type) {
    case "state":
      expectKeys(obj, ["type", "body"], "state message");
      return { type, body: decodeStateBody(obj.body) };
    case "directive":
      expectKeys(obj, ["type", "body"], "directive message");
      return { type, body: decodeDirectiveBody(obj.body) };
    case "event_ack": {
      expectKeys(obj, ["type", "kind"], "event_ack message");
      const kind = obj.kind;
      if (kind !== null && typeof kind !== "string") {
        fail("event_ack kind must be a string or null");
      }
      return { type, kind };
    }
    case "error":
      expectKeys(obj, ["type", "detail"], "error message");
      return { type, detail: asString(obj.detail, "detail") };
    default:
      fail(`unknown server message type ${type}`);
  }
}

// Encoders rebuild objects literal by literal so the serialized key order
// is canonical regardless of how the input object was assembled.

export function encodeServerMessage(msg: ServerMessage): string {
  switch (msg.type) {
    case "state": {
      const b = msg.body;
      return JSON.stringify({
        type: "state",
        body: {
          mood: { valence: b.mood.valence, arousal: b.mood.arousal },
          temperament: {
            valence: b.temperament.valence,
            arousal: b.temperament.arousal,
            archetype: b.temperament.archetype,
          },
          needs: {
            touch: b.needs.touch,
            rest: b.needs.rest,
            social: b.needs.social,
            hunger: b.needs.hunger,
          },
          clock: { t_ms: b.clock.t_ms, day: b.clock.day },
        },
      });
    }
    case "directive": {
      const b = msg.body;
      const body: Record<string, unknown> = { reason: b.reason, face: b.face };
      if (b.aura !== undefined) {
        body.aura = { hue: b.aura.hue, intensity: b.aura.intensity };
      }
      if (b.sound !== undefined) body.sound = b.sound;
      if (b.bubble !== undefined) body.bubble = b.bubble;
      body.duration_ms = b.duration_ms;
      body.t = b.t;
      return JSON.stringify({ type: "directive", body });
    }
    case "event_ack":
      return JSON.stringify({ type: "event_ack", kind: msg.kind });
    case "error":
      return JSON.stringify({ type: "error", detail: msg.detail });
  }
}

export function encodeClientMessage(msg: ClientMessage): string {
  switch (msg.type) {
    case "touch":
      if (!TOUCH_REGIONS.includes(msg.region)) {
        fail(`unknown touch region ${msg.region}`);
      }
      return JSON.stringify({ type: "touch", region: msg.region });
    case "word":
      if (!msg.text.trim()) fail("word text must be non-empty");
      return JSON.stringify({ type: "word", text: msg.text });
    case "gaze":
      if (msg.angle_deg < 0 || msg.angle_deg > 180) {
        fail(`gaze angle ${msg.angle_deg} outside [0, 180]`);
      }
      return JSON.stringify({ type: "gaze", angle_deg: msg.angle_deg });
    case "proximity":
      if (msg.distance_m < 0) fail(`negative distance ${msg.distance_m}`);
      return JSON.stringify({ type: "proximity", distance_m: msg.distance_m });
    case "get_state":
      return JSON.stringify({ type: "get_state" });
    case "set_compression":
      if (!(msg.factor > 0)) fail("compression factor must be > 0");
      return JSON.stringify({ type: "set_compression", factor: msg.factor });
  }
}

export function decodeClientMessage(line: string): ClientMessage {
  let raw: unknown;
  try {
    raw = JSON.parse(line);
  } catch {
    fail("not valid JSON");
  }
  const obj = asObject(raw, "message");
  const type = asString(obj.type, "type");
  switch (type) {
    case "touch": {
      expectKeys(obj, ["type", "region"], "touch message");
      const region = asString(obj.region, "region");
      if (!TOUCH_REGIONS.includes(region)) fail(`unknown touch region ${region}`);
      return { type, region: region as TouchRegion };
    }
    case "word":
      expectKeys(obj, ["type", "text"], "word message");
      return { type, text: asString(obj.text, "text") };
    case "gaze":
      expectKeys(obj, ["type", "angle_deg"], "gaze message");
      return { type, angle_deg: asNumber(obj.angle_deg, "angle_deg") };
    case "proximity":
      expectKeys(obj, ["type", "distance_m"], "proximity message");
      return { type, distance_m: asNumber(obj.distance_m, "distance_m") };
    case "get_state":
      expectKeys(obj, ["type"], "get_state message");
      return { type };
    case "set_compression":
      expectKeys(obj, ["type", "factor"], "set_compression message");
      return { type, factor: asNumber(obj.factor, "factor") };
    default:
      fail(`unknown client message type ${type}`);
  }
}
