import java.util.ArrayList;

public class Practice64 {
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

  static int fibonacci(int n) {
    int a = 0;
    int b = 1;
    for (int k = 0; k < n; k++) {
      int next = a + b;
      a = b;
      b = next;
    }
    return a;
  }

  static int findMax(int[] nums) {
    int biggest = nums[0];
    for (int k = 1; k < nums.length; k++) {
      if (nums[k] > biggest) {
        biggest = nums[k];
      }
    }
    return biggest;
  }

  static void countdown(int n) {
    do {
      System.out.println(n);
      n--;
      } while (n > 0);
      System.out.println("Go!");
    }

  public static void drawStars(int rows) {
    for (int row = 1; row <= rows; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  public static int search(int[] nums, int wanted) {
    for (int k = 0; k < nums.length; k++) {
      if (nums[k] == wanted) {
        return k;
      }
    }
    return -1;
  }

  static int countVowels(String word) {
    int found = 0;
    for (int k = 0; k < word.length(); k++) {
      char ch = Character.toLowerCase(word.charAt(k));
      switch (ch) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        found++;
        break;
        default:
        break;
      }
    }
    return found;
  }

  public static int addAll(int[] nums) {
    int sum = 0;
    for (int k = 0; k < nums.length; k++) {
      sum += nums[k];
    }
    return sum;
  }

  static ArrayList<Integer> evens(int[] nums) {
    ArrayList<Integer> list = new ArrayList<>();
    for (int v : nums) {
      if (v % 2 == 0) {
        list.add(v);
      }
    }
    return list;
  }

  static boolean isEven(int n) {
    return n % 2 == 0;
  }

  public static void main(String[] args) {
    int[] numbers = {7, 6, 1, 9, 7, 7};
    Point p = new Point(2, 5);
    System.out.println(p.distance());
    System.out.println("Fib: " + fibonacci(9));
    int top = findMax(numbers);
    System.out.println("Max is " + top);
    countdown(4);
    drawStars(6);
    int pos = search(numbers, 4);
    System.out.println("Found at " + pos);
    System.out.println(countVowels("hello world"));
    System.out.println("Sum: " + addAll(numbers));
    ArrayList<Integer> even = evens(numbers);
    System.out.println(even.size() + " even numbers");
    if (isEven(12)) {
      System.out.println("even");
    } else {
      System.out.println("odd");
    }
  }
}
