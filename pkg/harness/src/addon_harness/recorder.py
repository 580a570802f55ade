"""Recording layout: captures the draw calls a panel makes into a draw tree."""

from dataclasses import dataclass, field


@dataclass
class DrawItem:
    kind: str  # "operator" | "prop" | "separator"
    ref: str | None = None
    label: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.ref is not None:
            out["ref"] = self.ref
        if self.label is not None:
            out["label"] = self.label
        return out


@dataclass
class DrawBox:
    label: str | None = None
    items: list[DrawItem] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"label": self.label, "items": [item.to_dict() for item in self.items]}


@dataclass
class DrawTree:
    level: str
    boxes: list[DrawBox] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"level": self.level, "boxes": [box.to_dict() for box in self.boxes]}

    def identifiers(self) -> set[str]:
        """Refs of every non-separator item across all boxes."""
        return {
            item.ref
            for box in self.boxes
            for item in box.items
            if item.kind != "separator" and item.ref is not None
        }


class OperatorProps:
    """Returned by layout.operator(); assignments retarget the recorded item."""

    def __init__(self, item: DrawItem):
        object.__setattr__(self, "_item", item)
        object.__setattr__(self, "_values", {})

    def __setattr__(self, name, value):
        self._values[name] = value
        if name == "tool_id":
            self._item.ref = value

    def __getattr__(self, name):
        try:
            return self._values[name]
        except KeyError:
            raise AttributeError(name) from None


def _target_path(target) -> str:
    path = getattr(target, "_shim_path", None)
    if path:
        return path
    return type(target).__name__


class BoxLayout:
    def __init__(self, box: DrawBox):
        self._box = box

    def label(self, text: str = "", **_kwargs):
        if self._box.label is None:
            self._box.label = text

    def operator(self, idname: str, text: str = "", **_kwargs) -> OperatorProps:
        item = DrawItem(kind="operator", ref=idname, label=text or None)
        self._box.items.append(item)
        return OperatorProps(item)

    def prop(self, target, name: str, text: str = "", **_kwargs):
        item = DrawItem(kind="prop", ref=f"{_target_path(target)}.{name}",
                        label=text or None)
        self._box.items.append(item)

    def separator(self, **_kwargs):
        self._box.items.append(DrawItem(kind="separator"))

    def row(self, **_kwargs):
        return self

    def column(self, **_kwargs):
        return self


class RecordingLayout:
    """Top-level panel layout; only boxes contribute to the draw tree."""

    def __init__(self):
        self.boxes: list[DrawBox] = []
        self.top_level_props: list[str] = []

    def box(self) -> BoxLayout:
        box = DrawBox()
        self.boxes.append(box)
        return BoxLayout(box)

    def row(self, **_kwargs):
        return _SelectorRow(self)

    def column(self, **_kwargs):
        return _SelectorRow(self)

    def prop(self, target, name: str, **_kwargs):
        self.top_level_props.append(f"{_target_path(target)}.{name}")

    def operator(self, idname: str, text: str = "", **_kwargs) -> OperatorProps:
        # top-level buttons are outside every stage box; record nothing
        return OperatorProps(DrawItem(kind="operator", ref=idname, label=text or None))

    def label(self, text: str = "", **_kwargs):
        pass

    def separator(self, **_kwargs):
        pass


class _SelectorRow:
    """A row/column off the panel root (the level selector lives here)."""

    def __init__(self, parent: RecordingLayout):
        self._parent = parent

    def prop(self, target, name: str, **_kwargs):
        self._parent.top_level_props.append(f"{_target_path(target)}.{name}")

    def operator(self, idname: str, text: str = "", **_kwargs) -> OperatorProps:
        return self._parent.operator(idname, text=text)

    def label(self, text: str = "", **_kwargs):
        pass

    def separator(self, **_kwargs):
        pass

    def row(self, **_kwargs):
        return self

    def column(self, **_kwargs):
        return self
