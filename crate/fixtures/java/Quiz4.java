// Homework
public class Quiz4 {
  static class Point {
    int x;
    int y;
    Point(int x, int y) {
      this.x = x;
      this.y = y;
    }
    double distance() {
      return Math.sqrt(x * x + y * y);
    }
  }

  static int greatestDivisor(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  static double raise(double base, int exp) {
    double result = 1;
    for (int i = 0; i < exp; i++) {
      result *= base;
    }
    return result;
  }

  static char toLetter(int score) {
    if (score >= 90) {
      return 'A';
    } else if (score >= 80) {
      return 'B';
    } else if (score >= 70) {
      return 'C';
    } else {
      return 'F';
    }
  }

  public static int absolute(int x) {
    return x < 0 ? -x : x;
  }

  public static void main(String[] args) {
    Point p = new Point(3, 2);
    System.out.println(p.distance());
    System.out.println("GCD: " + greatestDivisor(56, 58));
    System.out.println(raise(2, 3));
    System.out.println("Grade: " + toLetter(40));
    System.out.println(absolute(0));
  }
}
