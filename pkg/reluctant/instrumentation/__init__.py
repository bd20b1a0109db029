"""计数与交换轨迹记录"""

from reluctant.instrumentation.recorder import Recorder, replay

__all__ = ["Recorder", "replay"]
