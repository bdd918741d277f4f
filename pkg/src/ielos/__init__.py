"""Line-of-sight path-following guidance laws with sideslip compensation."""

__version__ = "0.1.0"
